// Shared helpers for the property suites: corpus generation, oriented
// smoothing, case matching for the 4-ended relations.
#ifndef TFK_TESTS_SUPPORT_HPP
#define TFK_TESTS_SUPPORT_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tfk/alexander.hpp"
#include "tfk/diagram.hpp"

namespace support {

using namespace tfk;

// Random valid diagram grown from a one-crossing seed by twisting, with
// occasional caps, mirrors and strand reversals. Always validates.
inline TangleDiagram random_diagram(std::mt19937& rng, int max_crossings,
                                    int min_endpoints = 2) {
  std::uniform_int_distribution<int> coin(0, 1);
  TangleDiagram d = parse_diagram(coin(rng) ? "{{a, b, c, d}, {d, a, b, c, L, p, q}}"
                                            : "{{a, b, c, d}, {d, a, b, c, R, q, p}}");
  std::uniform_int_distribution<int> op(0, 9);
  int guard = 0;
  while (static_cast<int>(d.crossings.size()) < max_crossings && guard++ < 200) {
    int o = op(rng);
    if (o <= 5) {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(d.open_regions.size()) - 1);
      d = add_twist(d, d.open_regions[pick(rng)], coin(rng) ? Sign::L : Sign::R);
    } else if (o <= 6 && static_cast<int>(d.open_regions.size()) > std::max(4, min_endpoints + 2)) {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(d.open_regions.size()) - 1);
      auto cfg = d.boundary_config();
      int n2 = static_cast<int>(d.open_regions.size());
      int i = pick(rng);
      if (cfg[(i - 1 + n2) % n2].outward != cfg[i].outward) d = cap_off(d, d.open_regions[i]);
    } else if (o == 7) {
      d = mirror(d);
    } else {
      auto cols = d.colours();
      std::vector<std::string> v(cols.begin(), cols.end());
      std::uniform_int_distribution<int> pick(0, static_cast<int>(v.size()) - 1);
      d = reverse_strands(d, {v[pick(rng)]});
    }
  }
  while (static_cast<int>(d.crossings.size()) < 1)
    d = add_twist(d, d.open_regions[0], Sign::L);
  return d;
}

// Oriented smoothing of one crossing: the crossing disappears and the
// regions at quadrants 1 and 3 merge. Returns nothing if the smoothing
// would merge two open regions or leave no crossing.
inline std::optional<TangleDiagram> smooth_crossing(const TangleDiagram& d, int c) {
  if (d.crossings.size() < 2) return std::nullopt;
  const std::string& top = d.crossings[c].quadrants[0];
  const std::string& bottom = d.crossings[c].quadrants[2];
  if (top == bottom) {
    TangleDiagram r = d;
    r.crossings.erase(r.crossings.begin() + c);
    return r;
  }
  if (d.is_open(top) && d.is_open(bottom)) return std::nullopt;
  std::string keep = d.is_open(top) ? top : (d.is_open(bottom) ? bottom : top);
  std::string gone = (keep == top) ? bottom : top;
  TangleDiagram r = d;
  r.crossings.erase(r.crossings.begin() + c);
  for (auto& x : r.crossings)
    for (auto& q : x.quadrants)
      if (q == gone) q = keep;
  return r;
}

// Crossing switch: over and under strands trade places.
inline TangleDiagram switch_crossing(const TangleDiagram& d, int c) {
  TangleDiagram r = d;
  r.crossings[c].sign = flipped(r.crossings[c].sign);
  std::swap(r.crossings[c].over, r.crossings[c].under);
  return r;
}

inline GradedPoly one_colour(const GradedPoly& p, const std::string& t = "x") {
  GradedPoly r = p;
  for (const auto& c : p.colour_support())
    if (c != t) r = r.identify_colour(c, t);
  return r;
}

// Sum of coefficients (evaluation of all colours at 1).
inline long long eval_at_one(const GradedPoly& p) {
  long long s = 0;
  for (const auto& [m, c] : p.terms()) s += c;
  return s;
}

// Evaluation at -1 for one colour of a whole-power polynomial.
inline long long eval_at_minus_one(const GradedPoly& p, const std::string& t) {
  GradedPoly q = p.set_colour_pm_one(t, -1);
  return eval_at_one(q);
}

// Renames every region and colour of d so it shares nothing with `taken`.
inline TangleDiagram isolate_labels(const TangleDiagram& d, const std::set<std::string>& taken,
                                    const std::string& stem) {
  TangleDiagram r = d;
  std::map<std::string, std::string> reg, col;
  int i = 0;
  for (const auto& x : d.regions()) reg[x] = stem + "r" + std::to_string(i++);
  i = 0;
  for (const auto& x : d.colours()) col[x] = stem + "c" + std::to_string(i++);
  (void)taken;
  for (auto& o : r.open_regions) o = reg[o];
  for (auto& c : r.crossings) {
    for (auto& q : c.quadrants) q = reg[q];
    c.over = col[c.over];
    c.under = col[c.under];
  }
  return r;
}

// Plugs a 4-ended tangle into four consecutive boundary endpoints of the
// host, enclosing it completely: host regions x_i0..x_i0+4 meet the plug's
// open regions, with x_i0 and x_i0+4 joining around the back of the plug.
// Returns the glued diagram plus the colour identification applied to the
// plug (plug colour -> host colour).
struct PlugResult {
  TangleDiagram d;
  std::map<std::string, std::string> colour_of;
};

inline PlugResult plug4(const TangleDiagram& host, int i0, const TangleDiagram& plug) {
  int n2 = static_cast<int>(host.open_regions.size());
  if (n2 < 6) throw std::runtime_error("plug4: host needs at least 6 endpoints");
  if (plug.open_regions.size() != 4) throw std::runtime_error("plug4: plug must be 4-ended");
  auto cfg1 = host.boundary_config();
  auto cfg2 = plug.boundary_config();
  auto hostr = [&](int j) { return host.open_regions[(i0 + j) % n2]; };

  // endpoint j of the hole matches the plug endpoint between y_{3-j}, y_{4-j};
  // colour identification is a union-find merge (a plug strand may bridge
  // two host strands and vice versa)
  std::map<std::string, std::string> parent;
  std::function<std::string(std::string)> rep = [&](std::string c) {
    while (parent.count(c) && parent[c] != c) c = parent[c];
    return c;
  };
  auto tagp = [](const std::string& c) { return c + "\x01"; };
  for (int j = 0; j < 4; ++j) {
    const BoundaryEndpoint& e1 = cfg1[(i0 + j) % n2];
    const BoundaryEndpoint& e2 = cfg2[3 - j];
    if (e1.outward == e2.outward) throw std::runtime_error("plug4: orientation mismatch");
    std::string a = rep(e1.colour), b = rep(tagp(e2.colour));
    bool a_host = a.find('\x01') == std::string::npos;
    std::string keep = a_host ? a : b, drop = a_host ? b : a;
    parent[drop] = keep;
    parent[keep] = keep;
  }
  std::set<std::string> host_cols0 = host.colours();
  auto final_name = [&](const std::string& raw) {
    std::string r = rep(raw);
    if (r.find('\x01') == std::string::npos) return r;
    std::string base = r.substr(0, r.size() - 1);
    if (!host_cols0.count(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + "_" + std::to_string(i);
      if (!host_cols0.count(cand)) return cand;
    }
  };
  std::map<std::string, std::string> col;
  for (const auto& c : plug.colours()) col[c] = final_name(tagp(c));
  std::map<std::string, std::string> reg;
  reg[plug.open_regions[0]] = hostr(0);
  reg[plug.open_regions[3]] = hostr(1);
  reg[plug.open_regions[2]] = hostr(2);
  reg[plug.open_regions[1]] = hostr(3);
  std::set<std::string> taken = host.regions();
  int fresh = 0;
  for (const auto& r : plug.regions()) {
    if (reg.count(r)) continue;
    std::string cand;
    do {
      cand = "P" + std::to_string(fresh++);
    } while (taken.count(cand));
    reg[r] = cand;
    taken.insert(cand);
  }
  PlugResult out;
  out.colour_of = col;
  for (int j = 0; j < n2; ++j) {
    int rel = (j - i0 + n2) % n2;
    if (rel >= 1 && rel <= 4) continue;  // x1..x3 close up, x4 merges into x0
    out.d.open_regions.push_back(host.open_regions[j]);
  }
  for (const auto& c : host.crossings) {
    CrossingRecord x = c;
    for (auto& q : x.quadrants)
      if (q == hostr(4)) q = hostr(0);
    x.over = final_name(c.over);
    x.under = final_name(c.under);
    out.d.crossings.push_back(x);
  }
  for (const auto& c : plug.crossings) {
    CrossingRecord x;
    for (int q = 0; q < 4; ++q) x.quadrants[q] = reg[c.quadrants[q]];
    x.sign = c.sign;
    x.over = col[c.over];
    x.under = col[c.under];
    out.d.crossings.push_back(x);
  }
  return out;
}

// Builds a mutant pair by plugging `inner` and its rotation into the same
// host hole. Fails unless the mutating tangle's two open strands become the
// same colour of the glued diagram (the theorem's hypothesis) and every
// piece validates. Rotations that break the endpoint orientations get the
// all-strand reversal the mutation definition prescribes.
inline bool mutant_pair(const TangleDiagram& host, int i0, const TangleDiagram& inner,
                        const TangleDiagram& rotated, TangleDiagram& t, TangleDiagram& tm) {
  PlugResult a, b;
  try {
    a = plug4(host, i0, inner);
  } catch (const std::exception&) {
    return false;
  }
  try {
    b = plug4(host, i0, rotated);
  } catch (const std::exception&) {
    try {
      std::set<std::string> all = rotated.colours();
      b = plug4(host, i0, reverse_strands(rotated, all));
    } catch (const std::exception&) {
      return false;
    }
  }
  auto cfg = inner.boundary_config();
  std::set<std::string> open_images;
  for (const auto& e : cfg) open_images.insert(a.colour_of.at(e.colour));
  if (open_images.size() != 1) return false;
  if (!validate_diagram(a.d).clean() || !validate_diagram(b.d).clean()) return false;
  t = a.d;
  tm = b.d;
  return true;
}

// Boundary orientation pattern of a 4-ended, two-colour diagram against the
// case I / case II figures: returns 1, 2, or 0 (no match).
inline int four_ended_case(const TangleDiagram& d) {
  if (d.open_regions.size() != 4) return 0;
  auto cfg = d.boundary_config();  // cfg[i] between open[i] and open[i+1]
  // (a,b): in; (b,c): in; (c,d): out; (d,a): out, with matching colours:
  // case I: colour(a,b) == colour(d,a); case II: colour(a,b) == colour(c,d)
  if (cfg[0].outward || cfg[1].outward || !cfg[2].outward || !cfg[3].outward) return 0;
  if (cfg[0].colour == cfg[3].colour && cfg[1].colour == cfg[2].colour) return 1;
  if (cfg[0].colour == cfg[2].colour && cfg[1].colour == cfg[3].colour) return 2;
  return 0;
}

}  // namespace support

#endif
