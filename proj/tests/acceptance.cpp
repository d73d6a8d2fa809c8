// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <stdexcept>

#include "golden.hpp"
#include "support.hpp"
#include "tfk/alexander.hpp"
#include "tfk/pairing.hpp"
#include "tfk/pecmod.hpp"

using namespace tfk;
using namespace support;

namespace {

int failures = 0;

void run(int number, const std::string& name, double budget_s,
         const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::cout << "criterion " << number << " [" << name << "]: " << (ok ? "PASS" : "FAIL");
  std::printf(" (%.2fs)", dt);
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<TangleDiagram> corpus_fixed() {
  std::vector<TangleDiagram> out;
  out.push_back(parse_diagram(golden::kExampleV));
  out.push_back(parse_diagram(golden::kPretzelV));
  out.push_back(parse_diagram("{{a, b, c, d}, {d, a, b, c, L, p, q}}"));
  out.push_back(parse_diagram("{{a, b, c, d}, {d, a, b, c, R, q, p}}"));
  out.push_back(parse_diagram("{{a, b}, {a, e, f, b, L, p, r}, {f, e, a, b, L, r, p}}"));
  TangleDiagram t = parse_diagram("{{a, b, c, d}, {d, a, b, c, L, p, q}}");
  for (int i = 0; i < 4; ++i) {
    t = add_twist(t, t.open_regions[3], i % 2 ? Sign::R : Sign::L);
    out.push_back(t);
  }
  t = parse_diagram("{{a, b, c, d}, {d, a, b, c, R, q, p}}");
  for (int i = 0; i < 4; ++i) {
    t = add_twist(t, t.open_regions[i % 4], Sign::R);
    out.push_back(t);
  }
  TangleDiagram e = parse_diagram(golden::kExampleV);
  out.push_back(mirror(e));
  out.push_back(reverse_strands(e, {"p"}));
  out.push_back(reverse_strands(e, {"q"}));
  out.push_back(reverse_strands(e, {"p", "q"}));
  out.push_back(mirror(parse_diagram(golden::kPretzelV)));
  out.push_back(glue_tangles(parse_diagram("{{a, b, c, d}, {d, a, b, c, L, p, q}}"),
                             reverse_strands(parse_diagram(golden::kExampleV), {"p"}), 1));
  out.push_back(rotate_x(parse_diagram(golden::kExampleV)));
  out.push_back(rotate_y(parse_diagram(golden::kPretzelV)));
  return out;
}

bool criterion1(std::string& why) {
  TangleDiagram d = parse_diagram(golden::kExampleV);
  std::map<Site, GradedPoly> want;
  for (const auto& t : golden::pdh_terms()) {
    Site s{std::string(1, t.site)};
    want[s] = want[s] + GradedPoly::term(golden::pqh_monomial(t.p, t.q, t.h, t.d2), t.coef);
  }
  auto got = nabla_hat(d);
  if (got.size() != want.size()) {
    why = "site count mismatch";
    return false;
  }
  for (const auto& [s, p] : want)
    if (!(got.at(s) == p)) {
      why = "polynomial mismatch at site " + site_word(s);
      return false;
    }
  auto rows = generator_table(d);
  if (rows.size() != 22) {
    why = "expected 22 generator rows";
    return false;
  }
  std::multiset<std::string> g, w;
  for (const auto& r : rows)
    g.insert(site_word(r.site) + "|" + r.word + "|" + r.monomial.collapse_delta().str());
  for (const auto& r : golden::gh_rows())
    w.insert(std::string(1, r.site) + "|" + r.word + "|" +
             GradedPoly::term(golden::pqh_monomial(r.p, r.q, r.h, 0)).str());
  if (g != w) {
    why = "generator rows differ";
    return false;
  }
  return true;
}

bool criterion2(std::string& why) {
  TangleDiagram d = parse_diagram(golden::kPretzelV);
  auto states = enumerate_states(d);
  std::multiset<std::string> got, want;
  std::size_t total = 0;
  for (const auto& [s, v] : states) {
    total += v.size();
    for (const auto& x : v) {
      auto [m, c] = state_label(d, x).leading();
      got.insert(site_word(s) + "|" + std::to_string(m.get("p")) + "," +
                 std::to_string(m.get("q")) + "," + std::to_string(m.d2));
    }
  }
  for (const auto& r : golden::pretzel_rows())
    want.insert(std::string(1, r.site) + "|" + std::to_string(r.p2) + "," +
                std::to_string(r.q2) + "," + std::to_string(r.d2));
  if (total != 22 || got != want) {
    why = "state gradings differ from the table";
    return false;
  }
  // Euler characteristic of the transcribed module vs the table, up to an
  // overall sign per site.
  auto chi = euler_characteristic(cftd_pretzel_2m3());
  std::map<int, GradedPoly> table_chi;
  std::map<int, int> base;
  for (const auto& r : golden::pretzel_rows()) {
    int site = r.site - 'a' + 1;
    int h4 = r.p2 + r.q2 - 2 * r.d2;
    if (!base.count(site) || h4 < base[site]) base[site] = h4;
  }
  for (const auto& r : golden::pretzel_rows()) {
    int site = r.site - 'a' + 1;
    int h4 = r.p2 + r.q2 - 2 * r.d2;
    Monomial m;
    if (r.p2) m.set("p", r.p2);
    if (r.q2) m.set("q", r.q2);
    table_chi[site] = table_chi[site] + GradedPoly::term(m, (h4 - base[site]) % 8 == 0 ? 1 : -1);
  }
  for (const auto& [site, p] : table_chi) {
    GradedPoly q = chi.count(site) ? chi.at(site) : GradedPoly();
    if (!(q == p || q == -p)) {
      why = "module Euler characteristic differs at site " + std::to_string(site);
      return false;
    }
  }
  return true;
}

bool criterion3(std::string& why) {
  std::vector<TangleDiagram> corpus = {parse_diagram(golden::kExampleV),
                                       parse_diagram(golden::kPretzelV)};
  std::mt19937 rng(303);
  for (int i = 0; i < 200; ++i) corpus.push_back(random_diagram(rng, 6));
  for (const auto& d : corpus) {
    for (const auto& [s, v] : enumerate_states(d)) {
      if (v.empty()) continue;
      LatticeReport rep = lattice_report(d, s);
      if (!rep.acyclic || rep.top_count != 1 || rep.bottom_count != 1 ||
          (rep.lattice_checked && !rep.is_lattice) || !rep.connected) {
        why = "lattice failure on " + serialise(d) + " site " + site_word(s) + ": " + rep.str();
        return false;
      }
      KauffmanState top = clocked_state(d, s);
      KauffmanState bottom = counterclocked_state(d, s);
      int degen = 0;
      for (const auto& mrow : transposition_moves(d, top, &degen))
        if (!mrow.clockwise) {
          why = "clocked state admits an anticlockwise move";
          return false;
        }
      for (const auto& mrow : transposition_moves(d, bottom, &degen))
        if (mrow.clockwise) {
          why = "counterclocked state admits a clockwise move";
          return false;
        }
    }
  }
  return true;
}

bool criterion4(std::string& why) {
  std::mt19937 rng(404);
  auto corpus = corpus_fixed();
  if (corpus.size() < 20) {
    why = "fixed corpus too small";
    return false;
  }
  for (int i = 0; i < 100; ++i) corpus.push_back(random_diagram(rng, 5));

  GradedPoly skein_factor = GradedPoly::term(colour_monomial("x", 2)) -
                            GradedPoly::term(colour_monomial("x", -2));
  int skein_checked = 0, four_checked = 0, glue_checked = 0, knots = 0;
  for (const auto& d : corpus) {
    auto nh = nabla_hat(d);
    // mirror
    auto nm = nabla_hat(mirror(d));
    for (const auto& [s, p] : nh)
      if (!(nm.at(s) == p.invert_all_variables())) {
        why = "mirror identity fails";
        return false;
      }
    // reversal
    for (const auto& col : d.colours()) {
      int lk2 = total_linking_number2(d, col);
      if (lk2 % 2 != 0) continue;
      Monomial hshift;
      hshift.h = lk2 / 2;
      auto nr = nabla_hat(reverse_strands(d, {col}));
      for (const auto& [s, p] : nh) {
        bool odd = false;
        for (const auto& [m, c] : p.terms())
          if (m.get(col) % 2 != 0) odd = true;
        if (odd) continue;
        if (!(nr.at(s).collapse_delta() ==
              p.collapse_delta().reverse_colour(col).shift(hshift))) {
          why = "reversal identity fails";
          return false;
        }
      }
    }
    // mod-2 exponents (mod 4 in the whole-power convention)
    for (const auto& [s, p] : nh)
      for (const auto& col : p.colour_support()) {
        std::set<int> res;
        for (const auto& [m, c] : p.terms()) res.insert(((m.get(col) % 4) + 4) % 4);
        if (res.size() > 1) {
          why = "exponent congruence fails";
          return false;
        }
      }
    // skein triples
    for (std::size_t c = 0; c < d.crossings.size() && skein_checked < 150; ++c) {
      auto sm = smooth_crossing(d, static_cast<int>(c));
      if (!sm || !validate_diagram(*sm).clean()) continue;
      TangleDiagram plus = d.crossings[c].sign == Sign::L ? d : switch_crossing(d, c);
      TangleDiagram minus = switch_crossing(plus, static_cast<int>(c));
      auto np = nabla_all(plus);
      auto nmi = nabla_all(minus);
      auto nz = nabla_all(*sm);
      for (const auto& [s, p] : np) {
        GradedPoly lhs = one_colour(p) - one_colour(nmi.count(s) ? nmi.at(s) : GradedPoly());
        if (!(lhs == skein_factor * one_colour(nz.count(s) ? nz.at(s) : GradedPoly()))) {
          why = "skein relation fails";
          return false;
        }
      }
      ++skein_checked;
    }
    // 4-ended relation
    if (d.open_regions.size() == 4 && d.colours().size() == 2) {
      std::set<std::string> colset = d.colours();
      std::vector<std::string> cols(colset.begin(), colset.end());
      for (int mask = 0; mask < 4; ++mask) {
        TangleDiagram e = d;
        std::set<std::string> rev;
        if (mask & 1) rev.insert(cols[0]);
        if (mask & 2) rev.insert(cols[1]);
        if (!rev.empty()) e = reverse_strands(d, rev);
        if (four_ended_case(e) == 0) continue;
        TangleDiagram r = reverse_strands(e, {cols[0], cols[1]});
        if (!(nabla(e, Site{e.open_regions[1]}) == nabla(r, Site{r.open_regions[3]}))) {
          why = "b-d site relation fails";
          return false;
        }
        ++four_checked;
        break;
      }
    }
  }
  // knot normalisation
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 120 && knots < 40; ++i) {
    TangleDiagram d = parse_diagram("{{a, b, c, d}, {d, a, b, c, L, p, q}}");
    for (int k = 0; k <= i % 5; ++k)
      d = add_twist(d, d.open_regions[pick(rng)], coin(rng) ? Sign::L : Sign::R);
    auto cfg = d.boundary_config();
    int n2 = static_cast<int>(d.open_regions.size());
    for (int j = 0; j < n2; ++j) {
      if (cfg[(j - 1 + n2) % n2].outward == cfg[j].outward) continue;
      if (cfg[(j - 1 + n2) % n2].colour == cfg[j].colour) continue;
      TangleDiagram capped = cap_off(d, d.open_regions[j]);
      GradedPoly n = nabla(capped, Site{});
      std::set<std::string> cols = capped.colours();
      if (eval_at_one(n) != 1 || eval_at_minus_one(n, *cols.begin()) != 1) {
        why = "knot normalisation fails";
        return false;
      }
      ++knots;
      break;
    }
  }
  // glueing formula
  for (int i = 0; i < 60 && glue_checked < 10; ++i) {
    TangleDiagram t1 = random_diagram(rng, 4);
    TangleDiagram t2 = isolate_labels(random_diagram(rng, 3), t1.regions(), "Z");
    int k = 1 + (i % 2);
    if (k >= static_cast<int>(t1.open_regions.size()) ||
        k >= static_cast<int>(t2.open_regions.size()))
      continue;
    TangleDiagram g;
    try {
      g = glue_tangles(t1, t2, k, true);
    } catch (const std::exception&) {
      continue;
    }
    if (!validate_diagram(g).clean()) continue;
    auto cfg1 = t1.boundary_config();
    auto cfg2 = t2.boundary_config();
    std::set<std::string> cols1 = t1.colours();
    std::map<std::string, std::string> parent;
    std::function<std::string(std::string)> rep = [&](std::string c) {
      while (parent.count(c) && parent[c] != c) c = parent[c];
      return c;
    };
    for (int j = 0; j < k; ++j) {
      std::string a = rep(cfg1[j].colour), b = rep(cfg2[k - j - 1].colour);
      std::string keep = cols1.count(a) ? a : b, drop = cols1.count(a) ? b : a;
      parent[drop] = keep;
      parent[keep] = keep;
    }
    auto rename = [&](const GradedPoly& p) {
      GradedPoly r = p;
      for (const auto& c : p.colour_support())
        if (rep(c) != c) r = r.identify_colour(c, rep(c));
      return r;
    };
    auto nh1 = nabla_hat(t1);
    auto nh2 = nabla_hat(t2);
    auto nhg = nabla_hat(g);
    std::set<std::string> open_g(g.open_regions.begin(), g.open_regions.end());
    std::map<std::string, std::string> reg_ident;
    for (int j = 0; j <= k; ++j) reg_ident[t2.open_regions[k - j]] = t1.open_regions[j];
    std::map<Site, GradedPoly> sum;
    for (const auto& [s1, p1] : nh1)
      for (const auto& [s2, p2] : nh2) {
        std::set<std::string> occupied(s1.begin(), s1.end());
        bool disjoint = true;
        for (const auto& r2 : s2) {
          std::string r = reg_ident.count(r2) ? reg_ident[r2] : r2;
          if (!occupied.insert(r).second) disjoint = false;
        }
        if (!disjoint) continue;
        bool covered = true;
        for (int j = 1; j < k; ++j)
          if (!occupied.count(t1.open_regions[j])) covered = false;
        if (!covered) continue;
        Site trace;
        for (const auto& r : occupied)
          if (open_g.count(r)) trace.push_back(r);
        std::sort(trace.begin(), trace.end());
        sum[trace] = sum[trace] + rename(p1) * rename(p2);
      }
    for (const auto& [s, p] : nhg)
      if (!(p == (sum.count(s) ? sum.at(s) : GradedPoly()))) {
        why = "glueing formula fails";
        return false;
      }
    ++glue_checked;
  }
  if (skein_checked < 100 || four_checked < 5 || glue_checked < 10 || knots < 40) {
    why = "insufficient coverage: skein " + std::to_string(skein_checked) + ", four " +
          std::to_string(four_checked) + ", glue " + std::to_string(glue_checked) + ", knots " +
          std::to_string(knots);
    return false;
  }
  return true;
}

bool criterion5(std::string& why) {
  std::mt19937 rng(505);
  int done = 0;
  for (int i = 0; i < 400 && done < 5; ++i) {
    TangleDiagram h1 = random_diagram(rng, 3);
    TangleDiagram h2 = isolate_labels(random_diagram(rng, 2), {}, "H");
    TangleDiagram host;
    try {
      host = glue_tangles(h1, h2, 1, false);
    } catch (const std::exception&) {
      continue;
    }
    if (host.open_regions.size() < 6 || !validate_diagram(host).clean()) continue;
    TangleDiagram inner = random_diagram(rng, 4, 4);
    if (inner.open_regions.size() != 4) continue;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(host.open_regions.size()) - 1);
    TangleDiagram t, tm;
    if (!mutant_pair(host, pick(rng), inner, rotate_y(inner), t, tm)) continue;
    auto nt = nabla_all(t);
    auto nm = nabla_all(tm);
    if (nt.size() != nm.size()) {
      why = "mutant site sets differ";
      return false;
    }
    for (const auto& [s, p] : nt)
      if (!nm.count(s) || !(nm.at(s) == p)) {
        why = "mutation changes nabla";
        return false;
      }
    ++done;
  }
  if (done < 5) {
    why = "could not build five mutant pairs";
    return false;
  }
  // the 2-ended pair with the pretzel tangle as the mutating piece
  TangleDiagram one = parse_diagram("{{a, b, c, d}, {d, a, b, c, L, p, q}}");
  TangleDiagram two = reverse_strands(parse_diagram("{{a, b, c, d}, {d, a, b, c, L, p, q}}"),
                                      {"p", "q"});
  TangleDiagram host = glue_tangles(one, isolate_labels(two, {}, "H"), 1, false);
  TangleDiagram inner = parse_diagram(golden::kPretzelV);
  int found = 0;
  for (int i0 = 0; i0 < 6; ++i0)
    for (int rev = 0; rev < 4; ++rev) {
      TangleDiagram in2 = inner;
      std::set<std::string> rs;
      if (rev & 1) rs.insert("p");
      if (rev & 2) rs.insert("q");
      if (!rs.empty()) in2 = reverse_strands(inner, rs);
      TangleDiagram t, tm;
      if (!mutant_pair(host, i0, in2, rotate_y(in2), t, tm)) continue;
      auto nt = nabla_all(t);
      auto nm = nabla_all(tm);
      for (const auto& [s, p] : nt)
        if (!(nm.at(s) == p)) {
          why = "pretzel mutant pair disagrees";
          return false;
        }
      ++found;
    }
  if (found < 1) {
    why = "no pretzel mutant pair assembled";
    return false;
  }
  return true;
}

bool criterion6(std::string& why) {
  std::mt19937 rng(404);  // same corpus as criterion 4
  auto corpus = corpus_fixed();
  for (int i = 0; i < 100; ++i) corpus.push_back(random_diagram(rng, 5));
  for (const auto& d : corpus) {
    if (!validate_diagram(d).clean()) continue;
    for (const auto& [s, p] : nabla_all(d)) {
      GradedPoly det = nabla_via_determinant(d, s);
      if (!equal_up_to_unit(det, p)) {
        why = "determinant disagrees on " + serialise(d) + " site " + site_word(s);
        return false;
      }
    }
  }
  return true;
}

bool criterion7(std::string& why) {
  std::vector<PecModule> builders = {
      cftd_trivial(TrivialAxis::Vertical), cftd_trivial(TrivialAxis::Horizontal),
      cftd_crossing(Sign::L), cftd_crossing(Sign::R),
      cftd_twist(1), cftd_twist(-1), cftd_twist(2), cftd_twist(-2),
      cftd_twist(3), cftd_twist(-3), cftd_pretzel_2m3(),
      figure_eight_bc(), figure_eight_ad()};
  for (const auto& m : builders) {
    std::string w;
    if (!check_curved(m, &w)) {
      why = "builder fails d^2: " + w;
      return false;
    }
    if (!check_gradings(m, &w)) {
      why = "builder fails gradings: " + w;
      return false;
    }
  }
  for (int n : {1, 2}) {
    SkeinTriple t = skein_morphism(n);
    PecModule reduced = cancel_all_identities(mapping_cone(t.source, t.target, t.phi));
    PecModule expect = direct_sum(
        shift_alexander2(cftd_trivial(TrivialAxis::Vertical, "t"), "t", 2 * n),
        shift_alexander2(cftd_trivial(TrivialAxis::Vertical, "t"), "t", -2 * n));
    if (!isomorphic(reduced, expect, true)) {
      why = "skein cone is not two trivial copies for n = " + std::to_string(n);
      return false;
    }
  }
  {
    ResolutionData r = resolution_morphism();
    PecModule cone = mapping_cone(r.source, r.target, r.phi);
    PecMorphism h1;
    h1.add(cone.find("t.a"), cone.find("s.d"), parse_element("p1"));
    h1.add(cone.find("t.a"), cone.find("s.b"), parse_element("q2"));
    PecModule step1 = apply_homotopy(cone, h1);
    PecMorphism h2;
    h2.add(step1.find("t.c"), step1.find("s.d"), parse_element("q4"));
    h2.add(step1.find("t.c"), step1.find("s.b"), parse_element("p3"));
    PecModule step2 = apply_homotopy(step1, h2);
    PecModule want = shift_delta2(cftd_crossing(Sign::R), 1);
    want.punctures.reset();
    for (auto& g : want.gens) g.alex2.clear();
    if (!isomorphic(step2, want, true)) {
      why = "resolution cone does not reduce to the one-crossing module";
      return false;
    }
  }
  for (int sign : {1, -1}) {
    ResolutionData r = singular_morphism(sign);
    PecModule reduced = cancel_all_identities(mapping_cone(r.source, r.target, r.phi));
    PecModule want = sign > 0 ? figure_eight_bc() : figure_eight_ad();
    if (!isomorphic(reduced, want, true)) {
      why = "singular cone does not reduce to the figure-eight";
      return false;
    }
  }
  // rank symmetries on the tangle builders
  std::vector<PecModule> tangles = {
      cftd_trivial(TrivialAxis::Vertical), cftd_trivial(TrivialAxis::Horizontal),
      cftd_crossing(Sign::L), cftd_crossing(Sign::R),
      cftd_twist(2), cftd_twist(-2), cftd_twist(3), cftd_twist(-3),
      cftd_pretzel_2m3()};
  for (const auto& m : tangles) {
    auto rp = rank_profile(m);
    auto rank_of = [&](const std::string& letter, int d2) {
      auto it = rp.find({letter, d2});
      return it == rp.end() ? 0 : it->second;
    };
    std::set<int> deltas;
    for (const auto& [k, r] : rp) deltas.insert(k.second);
    for (int d2 : deltas) {
      if (rank_of("p1", d2) != rank_of("q2", d2) || rank_of("p1", d2) != rank_of("p3", d2) ||
          rank_of("p1", d2) != rank_of("q4", d2) || rank_of("q1", d2) != rank_of("p2", d2) ||
          rank_of("q1", d2) != rank_of("q3", d2) || rank_of("q1", d2) != rank_of("p4", d2)) {
        why = "rank symmetry fails";
        return false;
      }
    }
  }
  return true;
}

bool criterion8(std::string& why) {
  struct Case {
    PecModule m;
    int expect;
    TangleDiagram capped;
  };
  TangleDiagram one = parse_diagram("{{a, b, c, d}, {d, a, b, c, L, p, q}}");
  TangleDiagram t2 = add_twist(one, one.open_regions[3], Sign::L);
  TangleDiagram t3 = add_twist(t2, t2.open_regions[3], Sign::L);
  std::vector<Case> cases;
  // capping the trivial tangle at a leaves a split diagram, chi = 0
  cases.push_back({cftd_crossing(Sign::L), 2, cap_off(one, "a")});
  cases.push_back({cftd_crossing(Sign::R), 2, cap_off(mirror(one), "a")});
  cases.push_back({cftd_twist(3), 6, cap_off(t3, t3.open_regions[0])});
  cases.push_back({cftd_twist(-3), 6, cap_off(mirror(t3), t3.open_regions[0])});
  {
    ChainComplexF2 c = box_tensor(closing_type_a(1), cftd_trivial(TrivialAxis::Vertical));
    if (homology(c).total != 2) {
      why = "trivial tangle closure has wrong rank";
      return false;
    }
    for (const auto& row : c.out)
      if (!row.empty()) {
        why = "trivial tangle box complex has a differential";
        return false;
      }
  }
  GradedPoly stab = GradedPoly::term(colour_monomial("t", 2)) -
                    GradedPoly::term(colour_monomial("t", -2));
  for (auto& cs : cases) {
    ChainComplexF2 c = box_tensor(closing_type_a(1), cs.m);
    HomologyTable h = homology(c);
    if (h.total != cs.expect) {
      why = "closure rank " + std::to_string(h.total) + ", expected " +
            std::to_string(cs.expect);
      return false;
    }
    GradedPoly chi = one_colour(complex_euler(c), "t");
    GradedPoly rhs = one_colour(nabla(cs.capped, Site{}), "t");
    bool match = false;
    for (int j = 0; j <= 2 && !match; ++j) {
      if (equal_up_to_unit(chi, rhs)) match = true;
      rhs = rhs * stab;
    }
    if (!match) {
      why = "box Euler characteristic does not match the capped diagram";
      return false;
    }
  }
  // pretzel closure: Euler characteristic oracle only
  {
    ChainComplexF2 c = box_tensor(closing_type_a(1), cftd_pretzel_2m3());
    GradedPoly chi = one_colour(complex_euler(c), "t");
    GradedPoly rhs = one_colour(nabla(cap_off(parse_diagram(golden::kPretzelV), "a"), Site{}),
                                "t");
    bool match = false;
    for (int j = 0; j <= 2 && !match; ++j) {
      if (equal_up_to_unit(chi, rhs)) match = true;
      rhs = rhs * stab;
    }
    if (!match) {
      why = "pretzel closure Euler characteristic mismatch";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "worked example golden polynomials", 1.0, criterion1);
  run(2, "pretzel generator table and module", 1.0, criterion2);
  run(3, "clock lattice suite", 60.0, criterion3);
  run(4, "algebraic property suite", 60.0, criterion4);
  run(5, "mutation invariance", 60.0, criterion5);
  run(6, "determinant oracle", 60.0, criterion6);
  run(7, "curved module suite", 10.0, criterion7);
  run(8, "pairing ranks", 5.0, criterion8);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
