// Command-line surface for the tangle invariant library: batch computation
// of the polynomial invariants, state lattices, peculiar modules and
// closure pairings, with plain-text, TSV and DOT output.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tfk/alexander.hpp"
#include "tfk/pairing.hpp"
#include "tfk/pecmod.hpp"

namespace {

using namespace tfk;

std::size_t max_states() {
  if (const char* v = std::getenv("TFK_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return 10000000;
}

TangleDiagram load_diagram(const std::string& input) {
  std::string text;
  if (!input.empty() && input[0] == '{') {
    text = input;
  } else if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(input);
    if (!f) throw std::runtime_error("cannot open " + input);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return parse_diagram(text);
}

TangleDiagram load_valid(const std::string& input) {
  TangleDiagram d = load_diagram(input);
  ValidationReport rep = validate_diagram(d);
  if (!rep.ok()) throw std::runtime_error("invalid diagram:\n" + rep.str());
  (void)enumerate_states(d, max_states());
  return d;
}

Site parse_site(const TangleDiagram& d, const std::string& word) {
  Site s;
  std::string token;
  for (char c : word) {
    if (c == ',' || c == ' ') {
      if (!token.empty()) s.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) s.push_back(token);
  if (s.size() == 1 && s[0].size() > 1 && d.strand_count() > 2) {
    // single-letter region names may be written as one word
    Site split;
    for (char c : s[0]) split.push_back(std::string(1, c));
    s = split;
  }
  std::sort(s.begin(), s.end());
  return s;
}

PecModule builder(const std::string& desc) {
  std::string name = desc, arg;
  if (auto pos = desc.find(':'); pos != std::string::npos) {
    name = desc.substr(0, pos);
    arg = desc.substr(pos + 1);
  }
  if (name == "trivial")
    return cftd_trivial(arg == "h" || arg == "horizontal" ? TrivialAxis::Horizontal
                                                          : TrivialAxis::Vertical);
  if (name == "crossing") return cftd_crossing(arg == "-" ? Sign::R : Sign::L);
  if (name == "twist") {
    int n = std::stoi(arg.empty() ? "1" : arg);
    return cftd_twist(n);
  }
  if (name == "pretzel") return cftd_pretzel_2m3();
  if (name == "figure8") return arg == "-" ? figure_eight_ad() : figure_eight_bc();
  throw std::runtime_error("unknown builder: " + desc +
                           " (try trivial[:v|h], crossing[:+|-], twist:n, pretzel, figure8[:+|-])");
}

int site_index(const std::string& s) {
  if (s.size() != 1 || s[0] < 'a' || s[0] > 'd')
    throw std::runtime_error("closing site must be one of a, b, c, d");
  return s[0] - 'a' + 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangle invariants: Kauffman-state polynomials and peculiar modules"};
  app.require_subcommand(1);

  std::string input, site_filter, grid_spec, builder_spec = "crossing:+", close_site = "a";
  std::string oracle;
  bool hat = false, dot = false;

  auto* validate = app.add_subcommand("validate", "check a diagram and print the report");
  validate->add_option("input", input, "v-format file, '-' or inline {...}")->required();

  auto* nabla_cmd = app.add_subcommand("nabla", "per-site polynomial invariants");
  nabla_cmd->add_option("input", input)->required();
  nabla_cmd->add_flag("--hat", hat, "keep the h and delta gradings");
  nabla_cmd->add_option("--site", site_filter, "restrict to one site (regions, comma-separated)");
  nabla_cmd->add_option("--grid", grid_spec, "render a two-colour grid: c1,c2");
  nabla_cmd->add_option("--oracle", oracle, "cross-check method, currently 'det'");

  auto* states_cmd = app.add_subcommand("states", "list Kauffman states with words and labels");
  states_cmd->add_option("input", input)->required();
  states_cmd->add_option("--site", site_filter);

  auto* lattice_cmd = app.add_subcommand("lattice", "clock lattice reports per site");
  lattice_cmd->add_option("input", input)->required();
  lattice_cmd->add_option("--site", site_filter);

  auto* pecmod_cmd = app.add_subcommand("pecmod", "print a built peculiar module");
  pecmod_cmd->add_option("--builder", builder_spec, "trivial|crossing|twist:n|pretzel|figure8");
  pecmod_cmd->add_flag("--dot", dot, "emit graphviz");

  auto* pair_cmd = app.add_subcommand("pair", "homology of the closure pairing");
  pair_cmd->add_option("--builder", builder_spec);
  pair_cmd->add_option("--site", close_site, "closing site a..d");

  auto* close_cmd = app.add_subcommand("close", "box pairing against the lazy closing");
  close_cmd->add_option("--builder", builder_spec);
  close_cmd->add_option("--site", close_site);

  auto* export_cmd = app.add_subcommand("export", "TSV of the generator table");
  export_cmd->add_option("input", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      TangleDiagram d = load_diagram(input);
      ValidationReport rep = validate_diagram(d);
      std::cout << rep.str();
      return rep.ok() ? 0 : 1;
    }
    if (nabla_cmd->parsed()) {
      TangleDiagram d = load_valid(input);
      auto nh = nabla_hat(d);
      for (const auto& [s, p] : nh) {
        if (!site_filter.empty() && !(s == parse_site(d, site_filter))) continue;
        GradedPoly out = hat ? p : p.collapse_h_delta();
        if (!grid_spec.empty()) {
          auto comma = grid_spec.find(',');
          if (comma == std::string::npos)
            throw std::runtime_error("--grid needs two colours: c1,c2");
          std::cout << "site " << site_word(s) << ":\n"
                    << render_grid(out, grid_spec.substr(0, comma), grid_spec.substr(comma + 1))
                    << "\n";
        } else {
          std::cout << "site " << site_word(s) << ": " << out.str() << "\n";
        }
        if (!oracle.empty()) {
          if (oracle != "det") throw std::runtime_error("unknown oracle: " + oracle);
          GradedPoly det = nabla_via_determinant(d, s);
          bool ok = equal_up_to_unit(det, p.collapse_h_delta());
          std::cout << "  determinant oracle: " << (ok ? "agrees" : "DISAGREES") << "\n";
          if (!ok) return 1;
        }
      }
      return 0;
    }
    if (states_cmd->parsed()) {
      TangleDiagram d = load_valid(input);
      for (const auto& r : generator_table(d)) {
        if (!site_filter.empty() && !(r.site == parse_site(d, site_filter))) continue;
        std::cout << site_word(r.site) << "\t" << r.word << "\t" << r.monomial.str() << "\n";
      }
      return 0;
    }
    if (lattice_cmd->parsed()) {
      TangleDiagram d = load_valid(input);
      for (const auto& [s, v] : enumerate_states(d, max_states())) {
        if (!site_filter.empty() && !(s == parse_site(d, site_filter))) continue;
        std::cout << "site " << site_word(s) << ": " << lattice_report(d, s).str() << "\n";
      }
      return 0;
    }
    if (pecmod_cmd->parsed()) {
      PecModule m = builder(builder_spec);
      std::cout << (dot ? m.dot() : m.str());
      return 0;
    }
    if (pair_cmd->parsed()) {
      PecModule m = cancel_all_identities(builder(builder_spec));
      HomologyTable h = homology(box_tensor(closing_type_a(site_index(close_site)), m));
      std::cout << h.tsv();
      return 0;
    }
    if (close_cmd->parsed()) {
      CloseReport rep = close_tangle(builder(builder_spec), site_index(close_site));
      std::cout << rep.str();
      return rep.consistent ? 0 : 1;
    }
    if (export_cmd->parsed()) {
      TangleDiagram d = load_valid(input);
      std::cout << generator_table_tsv(d);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
