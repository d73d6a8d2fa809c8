#include "tfk/pecmod.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tfk {

namespace {
int mod4(int x) { return ((x - 1) % 4 + 4) % 4 + 1; }

std::string alex2_str(const std::map<std::string, int>& a) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [c, e] : a) {
    if (!first) os << ",";
    first = false;
    os << c << ":" << e;
  }
  os << ")";
  return os.str();
}

std::map<std::string, int> alex2_sum(const std::map<std::string, int>& a,
                                     const std::map<std::string, int>& b) {
  std::map<std::string, int> r = a;
  for (const auto& [c, e] : b) {
    r[c] += e;
    if (r[c] == 0) r.erase(c);
  }
  return r;
}
}  // namespace

int PecModule::find(const std::string& name) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  throw std::runtime_error("no generator named " + name);
}

void PecModule::add_arrow(int src, int dst, const PecElement& label) {
  auto& e = arrows[{src, dst}];
  e = e + label;
  if (e.is_zero()) arrows.erase({src, dst});
}

PecElement PecModule::arrow(int src, int dst) const {
  auto it = arrows.find({src, dst});
  return it == arrows.end() ? PecElement::zero() : it->second;
}

std::string PecModule::str() const {
  std::ostringstream os;
  for (const auto& g : gens)
    os << g.name << ": site " << "abcd"[g.site - 1] << " delta2 " << g.delta2 << " A2 "
       << alex2_str(g.alex2) << "\n";
  for (const auto& [k, e] : arrows)
    os << gens[k.first].name << " -> " << gens[k.second].name << ": " << e.str() << "\n";
  return os.str();
}

std::string PecModule::dot() const {
  std::ostringstream os;
  os << "digraph pecmod {\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    os << "  g" << i << " [label=\"" << "abcd"[g.site - 1] << "^" << alex2_str(g.alex2)
       << " δ^" << (g.delta2 % 2 == 0 ? std::to_string(g.delta2 / 2)
                                           : std::to_string(g.delta2) + "/2")
       << "\\n" << g.name << "\"];\n";
  }
  for (const auto& [k, e] : arrows)
    os << "  g" << k.first << " -> g" << k.second << " [label=\"" << e.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

bool check_curved(const PecModule& m, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (const auto& [k, e] : m.arrows) {
    for (const auto& b : e.paths) {
      if (b.start != m.gens[k.first].site || b.end() != m.gens[k.second].site)
        return fail("arrow " + m.gens[k.first].name + " -> " + m.gens[k.second].name +
                    " label " + path_str(b) + " breaks idempotents");
    }
  }
  std::size_t n = m.gens.size();
  for (std::size_t x = 0; x < n; ++x) {
    std::map<int, PecElement> dsq;
    for (std::size_t y = 0; y < n; ++y) {
      PecElement e1 = m.arrow(static_cast<int>(x), static_cast<int>(y));
      if (e1.is_zero()) continue;
      for (std::size_t z = 0; z < n; ++z) {
        PecElement e2 = m.arrow(static_cast<int>(y), static_cast<int>(z));
        if (e2.is_zero()) continue;
        auto& acc = dsq[static_cast<int>(z)];
        acc = acc + e1 * e2;
      }
    }
    for (std::size_t z = 0; z < n; ++z) {
      PecElement want;
      if (z == x) {
        want.toggle(BasisPath{m.gens[x].site, 4});
        want.toggle(BasisPath{m.gens[x].site, -4});
      }
      PecElement got = dsq.count(static_cast<int>(z)) ? dsq[static_cast<int>(z)] : PecElement{};
      if (!(got == want))
        return fail("d^2 at " + m.gens[x].name + " -> " + m.gens[z].name + " is " + got.str());
    }
  }
  return true;
}

bool check_gradings(const PecModule& m, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (const auto& [k, e] : m.arrows) {
    const PecGenerator& s = m.gens[k.first];
    const PecGenerator& d = m.gens[k.second];
    for (const auto& b : e.paths) {
      if (d.delta2 + delta2_of(b) - s.delta2 != 2)
        return fail("arrow " + s.name + " -> " + d.name + " label " + path_str(b) +
                    " has wrong delta degree");
      if (m.punctures) {
        auto want = alex2_sum(m.punctures->alexander_of(b), d.alex2);
        if (want != s.alex2)
          return fail("arrow " + s.name + " -> " + d.name + " label " + path_str(b) +
                      " breaks the Alexander grading");
      }
    }
  }
  return true;
}

void PecMorphism::add(int src, int dst, const PecElement& label) {
  auto& e = comps[{src, dst}];
  e = e + label;
  if (e.is_zero()) comps.erase({src, dst});
}

PecElement PecMorphism::at(int src, int dst) const {
  auto it = comps.find({src, dst});
  return it == comps.end() ? PecElement::zero() : it->second;
}

PecMorphism d_of_morphism(const PecModule& m, const PecModule& n, const PecMorphism& f) {
  PecMorphism r;
  // dN o f
  for (const auto& [k, e] : f.comps)
    for (std::size_t z = 0; z < n.gens.size(); ++z) {
      PecElement e2 = n.arrow(k.second, static_cast<int>(z));
      if (e2.is_zero()) continue;
      r.add(k.first, static_cast<int>(z), e * e2);
    }
  // f o dM
  for (std::size_t x = 0; x < m.gens.size(); ++x)
    for (std::size_t y = 0; y < m.gens.size(); ++y) {
      PecElement e1 = m.arrow(static_cast<int>(x), static_cast<int>(y));
      if (e1.is_zero()) continue;
      for (const auto& [k, e] : f.comps) {
        if (k.first != static_cast<int>(y)) continue;
        r.add(static_cast<int>(x), k.second, e1 * e);
      }
    }
  return r;
}

PecMorphism compose(const PecModule& m, const PecModule& n, const PecModule& o,
                    const PecMorphism& f, const PecMorphism& g) {
  (void)m;
  (void)n;
  (void)o;
  PecMorphism r;
  for (const auto& [kf, ef] : f.comps)
    for (const auto& [kg, eg] : g.comps) {
      if (kf.second != kg.first) continue;
      r.add(kf.first, kg.second, ef * eg);
    }
  return r;
}

PecMorphism identity_morphism(const PecModule& m) {
  PecMorphism r;
  for (std::size_t i = 0; i < m.gens.size(); ++i)
    r.add(static_cast<int>(i), static_cast<int>(i),
          PecElement::of(idempotent(m.gens[i].site)));
  return r;
}

PecModule cancel_arrow(const PecModule& m, int src, int dst) {
  if (src == dst) throw std::runtime_error("cancel_arrow: src equals dst");
  PecElement label = m.arrow(src, dst);
  PecElement unit = PecElement::of(idempotent(m.gens[src].site));
  if (!(label == unit))
    throw std::runtime_error("cancel_arrow: label is not a unit: " + label.str());

  PecModule r;
  r.punctures = m.punctures;
  std::vector<int> keep;
  std::map<int, int> remap;
  for (std::size_t i = 0; i < m.gens.size(); ++i) {
    if (static_cast<int>(i) == src || static_cast<int>(i) == dst) continue;
    remap[static_cast<int>(i)] = static_cast<int>(r.gens.size());
    r.gens.push_back(m.gens[i]);
    keep.push_back(static_cast<int>(i));
  }
  for (const auto& [k, e] : m.arrows) {
    if (k.first == src || k.first == dst || k.second == src || k.second == dst) continue;
    r.add_arrow(remap[k.first], remap[k.second], e);
  }
  // zeta + b g c: route x -> dst, then src -> y.
  for (int x : keep)
    for (int y : keep) {
      PecElement alpha = m.arrow(x, dst);
      PecElement beta = m.arrow(src, y);
      if (alpha.is_zero() || beta.is_zero()) continue;
      r.add_arrow(remap[x], remap[y], alpha * beta);
    }
  std::string why;
  if (!check_curved(r, &why))
    throw std::runtime_error("cancel_arrow broke the curvature equation: " + why);
  return r;
}

bool has_identity_arrow(const PecModule& m, int* src, int* dst) {
  for (const auto& [k, e] : m.arrows) {
    if (k.first == k.second) continue;
    for (const auto& b : e.paths)
      if (b.is_idempotent()) {
        if (src) *src = k.first;
        if (dst) *dst = k.second;
        return true;
      }
  }
  return false;
}

PecModule cancel_all_identities(const PecModule& m) {
  PecModule cur = m;
  int src, dst;
  while (has_identity_arrow(cur, &src, &dst)) cur = cancel_arrow(cur, src, dst);
  return cur;
}

PecModule apply_homotopy(const PecModule& m, const PecMorphism& h) {
  // degree: h must be one below the differential
  for (const auto& [k, e] : h.comps) {
    const PecGenerator& s = m.gens[k.first];
    const PecGenerator& d = m.gens[k.second];
    for (const auto& b : e.paths) {
      if (d.delta2 + delta2_of(b) - s.delta2 != 0)
        throw std::runtime_error("apply_homotopy: h has wrong delta degree");
      if (m.punctures && alex2_sum(m.punctures->alexander_of(b), d.alex2) != s.alex2)
        throw std::runtime_error("apply_homotopy: h breaks the Alexander grading");
    }
  }
  PecMorphism hh = compose(m, m, m, h, h);
  if (!hh.comps.empty()) throw std::runtime_error("apply_homotopy: h^2 is nonzero");
  PecMorphism dh = d_of_morphism(m, m, h);
  if (!compose(m, m, m, h, dh).comps.empty())
    throw std::runtime_error("apply_homotopy: h D(h) is nonzero");
  if (!compose(m, m, m, dh, h).comps.empty())
    throw std::runtime_error("apply_homotopy: D(h) h is nonzero");
  PecModule r = m;
  for (const auto& [k, e] : dh.comps) r.add_arrow(k.first, k.second, e);
  std::string why;
  if (!check_curved(r, &why)) throw std::runtime_error("apply_homotopy broke d^2: " + why);
  return r;
}

PecModule direct_sum(const PecModule& a, const PecModule& b) {
  PecModule r = a;
  r.punctures = a.punctures ? a.punctures : b.punctures;
  int off = static_cast<int>(a.gens.size());
  for (const auto& g : b.gens) {
    PecGenerator g2 = g;
    g2.name = g.name + "'";
    r.gens.push_back(g2);
  }
  for (const auto& [k, e] : b.arrows) r.add_arrow(k.first + off, k.second + off, e);
  return r;
}

PecModule mapping_cone(const PecModule& m, const PecModule& n, const PecMorphism& f) {
  PecMorphism df = d_of_morphism(m, n, f);
  if (!df.comps.empty()) throw std::runtime_error("mapping_cone: D(f) is nonzero");
  PecModule r;
  r.punctures = m.punctures ? m.punctures : n.punctures;
  for (const auto& g : m.gens) {
    PecGenerator g2 = g;
    g2.name = "s." + g.name;
    r.gens.push_back(g2);
  }
  for (const auto& g : n.gens) {
    PecGenerator g2 = g;
    g2.name = "t." + g.name;
    r.gens.push_back(g2);
  }
  int off = static_cast<int>(m.gens.size());
  for (const auto& [k, e] : m.arrows) r.add_arrow(k.first, k.second, e);
  for (const auto& [k, e] : n.arrows) r.add_arrow(k.first + off, k.second + off, e);
  for (const auto& [k, e] : f.comps) r.add_arrow(k.first, k.second + off, e);
  std::string why;
  if (!check_curved(r, &why)) throw std::runtime_error("mapping_cone broke d^2: " + why);
  return r;
}

PecModule shift_delta2(const PecModule& m, int delta2) {
  PecModule r = m;
  for (auto& g : r.gens) g.delta2 += delta2;
  return r;
}

PecModule shift_alexander2(const PecModule& m, const std::string& colour, int amount2) {
  PecModule r = m;
  for (auto& g : r.gens) {
    g.alex2[colour] += amount2;
    if (g.alex2[colour] == 0) g.alex2.erase(colour);
  }
  return r;
}

LoopDecomposition loop_decompose(const PecModule& m) {
  LoopDecomposition out;
  int n = static_cast<int>(m.gens.size());
  // partners via single-family arrow pairs
  std::vector<int> p_partner(n, -1), q_partner(n, -1);
  for (const auto& [k, e] : m.arrows) {
    for (const auto& b : e.paths) {
      if (b.is_idempotent()) return out;  // needs a reduced module
      bool p_type = b.len < 0;
      auto& partner = p_type ? p_partner : q_partner;
      if (partner[k.first] == -1)
        partner[k.first] = k.second;
      else if (partner[k.first] != k.second)
        return out;  // more than one incident pair of the same family
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p_partner[i] == -1 || q_partner[i] == -1) return out;
    if (p_partner[p_partner[i]] != i || q_partner[q_partner[i]] != i) return out;
  }
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<LoopSegment> loop;
    int cur = i;
    bool p_next = true;
    do {
      seen[cur] = true;
      loop.push_back({cur, p_next});
      cur = p_next ? p_partner[cur] : q_partner[cur];
      p_next = !p_next;
    } while (cur != i || !p_next);
    out.loops.push_back(loop);
  }
  out.loop_type = true;
  return out;
}

std::string LoopDecomposition::str(const PecModule& m) const {
  if (!loop_type) return "not loop-type";
  std::ostringstream os;
  for (const auto& loop : loops) {
    os << "(";
    for (std::size_t i = 0; i < loop.size(); ++i) {
      if (i) os << " ";
      os << "abcd"[m.gens[loop[i].gen].site - 1] << (loop[i].p_type ? " -p-" : " -q-");
    }
    os << ")\n";
  }
  return os.str();
}

std::map<int, GradedPoly> euler_characteristic(const PecModule& m) {
  std::map<int, GradedPoly> out;
  std::map<int, int> base_h4;
  for (const auto& g : m.gens) {
    int a = 0;
    for (const auto& [c, e] : g.alex2) a += e;
    int h4 = a - 2 * g.delta2;
    auto it = base_h4.find(g.site);
    if (it == base_h4.end() || h4 < it->second) base_h4[g.site] = h4;
  }
  for (const auto& g : m.gens) {
    int a = 0;
    for (const auto& [c, e] : g.alex2) a += e;
    int h4 = a - 2 * g.delta2;
    int rel = h4 - base_h4[g.site];
    if (rel % 4 != 0)
      throw std::runtime_error("euler_characteristic: inconsistent homological grading at " +
                               g.name);
    Monomial mono;
    for (const auto& [c, e] : g.alex2) mono.set(c, e);
    out[g.site] = out[g.site] + GradedPoly::term(mono, (rel / 4) % 2 == 0 ? 1 : -1);
  }
  return out;
}

std::map<std::pair<std::string, int>, int> rank_profile(const PecModule& m) {
  if (has_identity_arrow(m))
    throw std::runtime_error("rank_profile needs a module without identity arrows");
  // gather single-letter components keyed by (letter, source delta2)
  std::map<std::pair<std::string, int>, std::vector<std::pair<int, int>>> comps;
  for (const auto& [k, e] : m.arrows)
    for (const auto& b : e.paths)
      if (b.len == 1 || b.len == -1)
        comps[{path_str(b), m.gens[k.first].delta2}].push_back(k);
  std::map<std::pair<std::string, int>, int> out;
  for (const auto& [key, edges] : comps) {
    std::map<int, int> row_of, col_of;
    for (const auto& [s, d] : edges) {
      row_of.try_emplace(s, static_cast<int>(row_of.size()));
      col_of.try_emplace(d, static_cast<int>(col_of.size()));
    }
    std::vector<std::vector<bool>> mat(row_of.size(), std::vector<bool>(col_of.size(), false));
    for (const auto& [s, d] : edges) mat[row_of[s]][col_of[d]] = true;
    // F2 Gaussian elimination
    int rank = 0;
    std::size_t rows = mat.size(), cols = rows ? mat[0].size() : 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
      std::size_t pivot = rr;
      while (pivot < rows && !mat[pivot][c]) ++pivot;
      if (pivot == rows) continue;
      std::swap(mat[pivot], mat[rr]);
      for (std::size_t i = 0; i < rows; ++i)
        if (i != rr && mat[i][c])
          for (std::size_t j = 0; j < cols; ++j) mat[i][j] = mat[i][j] != mat[rr][j];
      ++rr;
      ++rank;
    }
    out[key] = rank;
  }
  return out;
}

namespace {

bool iso_search(const PecModule& a, const PecModule& b, bool graded, std::vector<int>& match,
                std::vector<bool>& used, std::size_t i) {
  std::size_t n = a.gens.size();
  if (i == n) {
    for (const auto& [k, e] : a.arrows)
      if (!(b.arrow(match[k.first], match[k.second]) == e)) return false;
    for (const auto& [k, e] : b.arrows) {
      // surjectivity of arrow match: find preimage pair
      int s = -1, d = -1;
      for (std::size_t x = 0; x < n; ++x) {
        if (match[x] == k.first) s = static_cast<int>(x);
        if (match[x] == k.second) d = static_cast<int>(x);
      }
      if (s < 0 || d < 0 || !(a.arrow(s, d) == e)) return false;
    }
    return true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    const PecGenerator& ga = a.gens[i];
    const PecGenerator& gb = b.gens[j];
    if (ga.site != gb.site) continue;
    if (graded && (ga.delta2 != gb.delta2 || ga.alex2 != gb.alex2)) continue;
    bool ok = true;
    for (std::size_t x = 0; x < i && ok; ++x) {
      if (!(a.arrow(static_cast<int>(x), static_cast<int>(i)) ==
            b.arrow(match[x], static_cast<int>(j))))
        ok = false;
      if (!(a.arrow(static_cast<int>(i), static_cast<int>(x)) ==
            b.arrow(static_cast<int>(j), match[x])))
        ok = false;
    }
    if (!(a.arrow(static_cast<int>(i), static_cast<int>(i)) ==
          b.arrow(static_cast<int>(j), static_cast<int>(j))))
      ok = false;
    if (!ok) continue;
    match[i] = static_cast<int>(j);
    used[j] = true;
    if (iso_search(a, b, graded, match, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const PecModule& a, const PecModule& b, bool graded) {
  if (a.gens.size() != b.gens.size()) return false;
  std::vector<int> match(a.gens.size(), -1);
  std::vector<bool> used(a.gens.size(), false);
  return iso_search(a, b, graded, match, used, 0);
}

// ---------- builders ----------

PunctureOrientation crossing_punctures(Sign sign) {
  PunctureOrientation po;
  if (sign == Sign::L)
    po.at = {{{"q", false}, {"p", true}, {"q", true}, {"p", false}}};
  else
    po.at = {{{"p", false}, {"q", true}, {"p", true}, {"q", false}}};
  return po;
}

PunctureOrientation twist_punctures() {
  PunctureOrientation po;
  po.at = {{{"t", false}, {"t", true}, {"t", true}, {"t", false}}};
  return po;
}

PunctureOrientation pretzel_punctures() {
  PunctureOrientation po;
  po.at = {{{"p", false}, {"p", true}, {"q", false}, {"q", true}}};
  return po;
}

PecModule cftd_trivial(TrivialAxis axis, const std::string& colour) {
  PecModule m;
  m.punctures = twist_punctures();
  for (auto& e : m.punctures->at) e.colour = colour;
  if (axis == TrivialAxis::Vertical) {
    m.gens.push_back({"b", 2, 0, {}});
    m.gens.push_back({"d", 4, 0, {}});
    m.add_arrow(1, 0, parse_element("p43+q12"));
    m.add_arrow(0, 1, parse_element("p21+q34"));
  } else {
    // strands join punctures 2-3 and 4-1; orientations chosen to match
    m.punctures->at = {{{colour, true}, {colour, false}, {colour, true}, {colour, false}}};
    m.gens.push_back({"a", 1, 0, {}});
    m.gens.push_back({"c", 3, 0, {}});
    m.add_arrow(0, 1, parse_element("p14+q23"));
    m.add_arrow(1, 0, parse_element("p32+q41"));
  }
  return m;
}

PecModule cftd_crossing(Sign sign) {
  PecModule m;
  m.punctures = crossing_punctures(sign);
  if (sign == Sign::L) {
    m.gens.push_back({"a", 1, 0, {{"p", 1}, {"q", -1}}});
    m.gens.push_back({"b", 2, 1, {{"p", -1}, {"q", -1}}});
    m.gens.push_back({"c", 3, 0, {{"p", -1}, {"q", 1}}});
    m.gens.push_back({"d", 4, 1, {{"p", 1}, {"q", 1}}});
    m.add_arrow(0, 3, parse_element("p1"));
    m.add_arrow(0, 1, parse_element("q2"));
    m.add_arrow(3, 0, parse_element("p432"));
    m.add_arrow(3, 2, parse_element("q123"));
    m.add_arrow(1, 0, parse_element("q341"));
    m.add_arrow(1, 2, parse_element("p214"));
    m.add_arrow(2, 3, parse_element("q4"));
    m.add_arrow(2, 1, parse_element("p3"));
  } else {
    m.gens.push_back({"a", 1, 0, {{"p", 1}, {"q", -1}}});
    m.gens.push_back({"b", 2, -1, {{"p", 1}, {"q", 1}}});
    m.gens.push_back({"c", 3, 0, {{"p", -1}, {"q", 1}}});
    m.gens.push_back({"d", 4, -1, {{"p", -1}, {"q", -1}}});
    m.add_arrow(0, 3, parse_element("q234"));
    m.add_arrow(0, 1, parse_element("p143"));
    m.add_arrow(3, 0, parse_element("q1"));
    m.add_arrow(3, 2, parse_element("p4"));
    m.add_arrow(1, 0, parse_element("p2"));
    m.add_arrow(1, 2, parse_element("q3"));
    m.add_arrow(2, 3, parse_element("p321"));
    m.add_arrow(2, 1, parse_element("q412"));
  }
  return m;
}

PecModule cftd_twist(int n) {
  if (n == 0) throw std::runtime_error("cftd_twist needs n != 0");
  bool pos = n > 0;
  int k = pos ? n : -n;
  PecModule m;
  m.punctures = twist_punctures();
  // ends
  m.gens.push_back({"b", 2, pos ? k : -k, {{"t", pos ? -2 * k : 2 * k}}});
  m.gens.push_back({"d", 4, pos ? k : -k, {{"t", pos ? 2 * k : -2 * k}}});
  int chain_delta2 = pos ? (k - 1) : -(k - 1);
  // chain A runs c^(1-n), a^(3-n), ..., a^(n-1); chain B starts at a^(1-n)
  std::vector<int> chainA, chainB;
  for (int i = 0; i < k; ++i) {
    int site = (i % 2 == 0) ? 3 : 1;
    chainA.push_back(static_cast<int>(m.gens.size()));
    m.gens.push_back({"u" + std::to_string(i), site, chain_delta2,
                      {{"t", 2 * (1 - k + 2 * i)}}});
  }
  for (int i = 0; i < k; ++i) {
    int site = (i % 2 == 0) ? 1 : 3;
    chainB.push_back(static_cast<int>(m.gens.size()));
    m.gens.push_back({"v" + std::to_string(i), site, chain_delta2,
                      {{"t", 2 * (1 - k + 2 * i)}}});
  }
  for (auto& g : m.gens)
    if (g.alex2.count("t") && g.alex2["t"] == 0) g.alex2.erase("t");

  auto pair_arrows = [&](int x, int y, bool p_type) {
    int sx = m.gens[x].site, sy = m.gens[y].site;
    int len_xy = p_type ? ((sx - sy) % 4 + 4) % 4 : ((sy - sx) % 4 + 4) % 4;
    if (len_xy == 0) throw std::runtime_error("degenerate loop segment");
    m.add_arrow(x, y, PecElement::of(BasisPath{sx, p_type ? -len_xy : len_xy}));
    m.add_arrow(y, x, PecElement::of(BasisPath{sy, p_type ? -(4 - len_xy) : 4 - len_xy}));
  };

  int b = 0, d = 1;
  // The chain ends at sites a and c; one of them carries n-1, the other 1-n.
  int a_end = (m.gens[chainA.back()].site == 1) ? chainA.back() : chainB.back();
  int c_end = (m.gens[chainA.back()].site == 3) ? chainA.back() : chainB.back();
  if (pos) {
    // T_n: b pairs the chain fronts (p against c^(1-n), q against a^(1-n)),
    // d pairs the ends (p against a^(n-1), q against c^(n-1)).
    pair_arrows(chainA.front(), b, true);
    pair_arrows(chainB.front(), b, false);
    pair_arrows(a_end, d, true);
    pair_arrows(c_end, d, false);
  } else {
    // T_-n: d pairs the fronts, b the ends.
    pair_arrows(chainA.front(), d, true);
    pair_arrows(chainB.front(), d, false);
    pair_arrows(a_end, b, true);
    pair_arrows(c_end, b, false);
  }
  for (int i = 0; i + 1 < k; ++i) {
    pair_arrows(chainA[i], chainA[i + 1], i % 2 == 1);   // q first from c^(1-n)
    pair_arrows(chainB[i], chainB[i + 1], i % 2 == 0);   // p first from a^(1-n)
  }
  std::string why;
  if (!check_curved(m, &why)) throw std::runtime_error("cftd_twist: " + why);
  if (!check_gradings(m, &why)) throw std::runtime_error("cftd_twist gradings: " + why);
  return m;
}

PecModule loop_from_word(const std::vector<LoopWordEntry>& word, const std::string& stem) {
  if (word.size() < 2 || word.size() % 2 != 0)
    throw std::runtime_error("loop_from_word: word length must be even and >= 2");
  PecModule m;
  for (std::size_t i = 0; i < word.size(); ++i)
    m.gens.push_back({stem + std::to_string(i), word[i].site, word[i].delta2, word[i].alex2});
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].p_to_next == word[(i + 1) % word.size()].p_to_next)
      throw std::runtime_error("loop_from_word: segment families must alternate");
    int x = static_cast<int>(i), y = static_cast<int>((i + 1) % word.size());
    bool p_type = word[i].p_to_next;
    int sx = m.gens[x].site, sy = m.gens[y].site;
    int len_xy = p_type ? ((sx - sy) % 4 + 4) % 4 : ((sy - sx) % 4 + 4) % 4;
    if (len_xy == 0) throw std::runtime_error("loop_from_word: equal sites on a segment");
    m.add_arrow(x, y, PecElement::of(BasisPath{sx, p_type ? -len_xy : len_xy}));
    m.add_arrow(y, x, PecElement::of(BasisPath{sy, p_type ? -(4 - len_xy) : 4 - len_xy}));
  }
  std::string why;
  if (!check_curved(m, &why)) throw std::runtime_error("loop_from_word: " + why);
  return m;
}

PecModule cftd_pretzel_2m3() {
  auto E = [](int site, int p2, int q2, int d2, bool p_next) {
    LoopWordEntry e;
    e.site = site;
    e.delta2 = d2;
    if (p2) e.alex2["p"] = p2;
    if (q2) e.alex2["q"] = q2;
    e.p_to_next = p_next;
    return e;
  };
  // loop A: x2d' -p- x2c1 -q- a1y2 -p- dy2 -q- x1c1 -p- a1y1 -q-
  PecModule a = loop_from_word(
      {E(4, -2, 6, -4, true), E(3, -2, 4, -3, false), E(1, 0, 2, -3, true),
       E(4, 2, 2, -2, false), E(3, 2, 4, -3, true), E(1, 0, 6, -3, false)},
      "A");
  // loop B: by1 -p- x2c2 -q- a1y3 -p- dy3 -q- x1c2 -p- a2y1 -q-
  PecModule b = loop_from_word(
      {E(2, -2, 2, -2, true), E(3, -2, 0, -3, false), E(1, 0, -2, -3, true),
       E(4, 2, -2, -2, false), E(3, 2, 0, -3, true), E(1, 0, 2, -3, false)},
      "B");
  // loop C: by2 -p- x2c3 -q- a2y3 -p- x1b' -q- x1c3 -p- a2y2 -q-
  PecModule c = loop_from_word(
      {E(2, -2, -2, -2, true), E(3, -2, -4, -3, false), E(1, 0, -6, -3, true),
       E(2, 2, -6, -4, false), E(3, 2, -4, -3, true), E(1, 0, -2, -3, false)},
      "C");
  PecModule m = direct_sum(direct_sum(a, b), c);
  m.punctures = pretzel_punctures();
  std::string why;
  if (!check_curved(m, &why)) throw std::runtime_error("cftd_pretzel_2m3: " + why);
  if (!check_gradings(m, &why)) throw std::runtime_error("cftd_pretzel_2m3 gradings: " + why);
  return m;
}

SkeinTriple skein_morphism(int n) {
  if (n <= 0) throw std::runtime_error("skein_morphism needs n > 0");
  SkeinTriple t;
  t.source = shift_delta2(cftd_twist(n), -n);
  t.target = shift_delta2(cftd_twist(-n), n);
  // identity on the chain generators, p21+q34 on b -> d, p43+q12 on d -> b
  t.phi.add(t.source.find("b"), t.target.find("d"), parse_element("p21+q34"));
  t.phi.add(t.source.find("d"), t.target.find("b"), parse_element("p43+q12"));
  for (int i = 0; i < n; ++i) {
    std::string u = "u" + std::to_string(i), v = "v" + std::to_string(i);
    t.phi.add(t.source.find(u), t.target.find(u),
              PecElement::of(idempotent(t.source.gens[t.source.find(u)].site)));
    t.phi.add(t.source.find(v), t.target.find(v),
              PecElement::of(idempotent(t.source.gens[t.source.find(v)].site)));
  }
  return t;
}

ResolutionData resolution_morphism() {
  // The triangle preserves no Alexander gradings, so the punctures are
  // dropped; the delta shift on the target keeps the cone delta-consistent.
  ResolutionData r;
  r.source = cftd_trivial(TrivialAxis::Vertical);
  r.target = shift_delta2(cftd_trivial(TrivialAxis::Horizontal), 1);
  r.source.punctures.reset();
  r.target.punctures.reset();
  r.phi.add(r.source.find("b"), r.target.find("c"), parse_element("q3"));
  r.phi.add(r.source.find("b"), r.target.find("a"), parse_element("p2"));
  r.phi.add(r.source.find("d"), r.target.find("a"), parse_element("q1"));
  r.phi.add(r.source.find("d"), r.target.find("c"), parse_element("p4"));
  return r;
}

ResolutionData singular_morphism(int sign) {
  if (sign != 1 && sign != -1) throw std::runtime_error("singular_morphism: sign must be +-1");
  ResolutionData r;
  r.source = shift_alexander2(shift_delta2(cftd_trivial(TrivialAxis::Vertical), -1), "t",
                              2 * sign);
  r.target = cftd_twist(1);
  if (sign > 0) {
    r.phi.add(r.source.find("d"), r.target.find("d"), PecElement::of(idempotent(4)));
    r.phi.add(r.source.find("b"), r.target.find("v0"), parse_element("p2"));
    r.phi.add(r.source.find("b"), r.target.find("u0"), parse_element("q3"));
  } else {
    r.phi.add(r.source.find("b"), r.target.find("b"), PecElement::of(idempotent(2)));
    r.phi.add(r.source.find("d"), r.target.find("v0"), parse_element("q1"));
    r.phi.add(r.source.find("d"), r.target.find("u0"), parse_element("p4"));
  }
  return r;
}

PecModule figure_eight_bc() {
  PecModule m;
  m.punctures = twist_punctures();
  m.gens.push_back({"a", 1, 0, {}});
  m.gens.push_back({"b+", 2, -1, {{"t", 2}}});
  m.gens.push_back({"b-", 2, 1, {{"t", -2}}});
  m.gens.push_back({"c", 3, 0, {}});
  m.add_arrow(0, 1, parse_element("p143"));
  m.add_arrow(0, 2, parse_element("q2"));
  m.add_arrow(1, 0, parse_element("p2"));
  m.add_arrow(1, 3, parse_element("q3"));
  m.add_arrow(2, 0, parse_element("q341"));
  m.add_arrow(2, 3, parse_element("p214"));
  m.add_arrow(3, 1, parse_element("q412"));
  m.add_arrow(3, 2, parse_element("p3"));
  return m;
}

PecModule figure_eight_ad() {
  PecModule m;
  m.punctures = twist_punctures();
  m.gens.push_back({"a", 1, 0, {}});
  m.gens.push_back({"d+", 4, 1, {{"t", 2}}});
  m.gens.push_back({"d-", 4, -1, {{"t", -2}}});
  m.gens.push_back({"c", 3, 0, {}});
  m.add_arrow(0, 1, parse_element("p1"));
  m.add_arrow(0, 2, parse_element("q234"));
  m.add_arrow(1, 0, parse_element("p432"));
  m.add_arrow(1, 3, parse_element("q123"));
  m.add_arrow(2, 0, parse_element("q1"));
  m.add_arrow(2, 3, parse_element("p4"));
  m.add_arrow(3, 1, parse_element("q4"));
  m.add_arrow(3, 2, parse_element("p321"));
  return m;
}

}  // namespace tfk
