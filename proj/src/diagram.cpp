#include "tfk/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tfk {

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& e : errors) os << "error: " << e << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  if (errors.empty() && warnings.empty()) os << "ok\n";
  return os.str();
}

std::set<std::string> TangleDiagram::regions() const {
  std::set<std::string> r(open_regions.begin(), open_regions.end());
  for (const auto& c : crossings)
    for (const auto& q : c.quadrants) r.insert(q);
  return r;
}

std::set<std::string> TangleDiagram::closed_regions() const {
  std::set<std::string> r = regions();
  for (const auto& o : open_regions) r.erase(o);
  return r;
}

std::set<std::string> TangleDiagram::colours() const {
  std::set<std::string> r;
  for (const auto& c : crossings) {
    r.insert(c.over);
    r.insert(c.under);
  }
  return r;
}

bool TangleDiagram::is_open(const std::string& r) const {
  return std::find(open_regions.begin(), open_regions.end(), r) != open_regions.end();
}

StrandEnd TangleDiagram::end_at(int c, int k) const {
  // Direction/role patterns around a crossing, anticlockwise from the end
  // between quadrants 1 and 2:
  //   positive (L): out-under, in-over, in-under, out-over
  //   negative (R): out-over, in-under, in-over, out-under
  static const bool out_pat[4] = {true, false, false, true};
  static const bool over_L[4] = {false, true, false, true};
  const CrossingRecord& x = crossings[c];
  StrandEnd e;
  e.crossing = c;
  e.end = k;
  e.outward = out_pat[k];
  e.over_role = (x.sign == Sign::L) ? over_L[k] : !over_L[k];
  e.colour = e.over_role ? x.over : x.under;
  // Anticlockwise, quadrant k -> quadrant k+1 crosses this end from its right
  // side to its left side when the end points outward, and left to right when
  // it points inward.
  const std::string& a = x.quadrants[k];
  const std::string& b = x.quadrants[(k + 1) % 4];
  if (e.outward) {
    e.right = a;
    e.left = b;
  } else {
    e.right = b;
    e.left = a;
  }
  return e;
}

namespace {

// Strand ends of one kind: same colour, same regions left/right, same
// direction. An outgoing end continues internally into an ingoing end of the
// matching class; the leftovers are tangle endpoints.
struct EndClass {
  std::string colour, left, right;
  bool outward = false;
  bool operator<(const EndClass& o) const {
    return std::tie(colour, left, right, outward) <
           std::tie(o.colour, o.left, o.right, o.outward);
  }
};

}  // namespace

std::vector<BoundaryEndpoint> TangleDiagram::boundary_config() const {
  std::map<EndClass, int> total;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
    for (int k = 0; k < 4; ++k) {
      StrandEnd e = end_at(c, k);
      ++total[{e.colour, e.left, e.right, e.outward}];
    }

  // Each boundary slot (between consecutive open regions) consumes exactly
  // one end; whatever remains must pair up internally, an out against an in
  // of the same colour and sides. Search for a consistent assignment.
  int n2 = static_cast<int>(open_regions.size());
  std::vector<std::vector<EndClass>> cand(n2);
  for (int i = 0; i < n2; ++i) {
    const std::string& before = open_regions[i];
    const std::string& after = open_regions[(i + 1) % n2];
    for (const auto& [cl, cnt] : total) {
      bool out_here = cl.outward && cl.right == before && cl.left == after;
      bool in_here = !cl.outward && cl.left == before && cl.right == after;
      if (out_here || in_here) cand[i].push_back(cl);
    }
    if (cand[i].empty())
      throw std::runtime_error("no endpoint between open regions " + before + " and " + after);
  }

  std::map<EndClass, int> used;
  std::vector<EndClass> pick(n2);
  std::function<bool(int)> solve = [&](int i) -> bool {
    if (i == n2) {
      for (const auto& [cl, cnt] : total) {
        EndClass other = cl;
        other.outward = !cl.outward;
        auto it = total.find(other);
        int other_cnt = (it == total.end()) ? 0 : it->second;
        int other_used = used.count(other) ? used[other] : 0;
        if (cnt - used[cl] != other_cnt - other_used) return false;  // unpairable leftovers
      }
      return true;
    }
    for (const auto& cl : cand[i]) {
      if (used[cl] >= total.at(cl)) continue;
      ++used[cl];
      pick[i] = cl;
      if (solve(i + 1)) return true;
      --used[cl];
    }
    return false;
  };
  if (!solve(0)) throw std::runtime_error("strand ends do not line up with the boundary");

  std::vector<BoundaryEndpoint> cfg;
  for (int i = 0; i < n2; ++i)
    cfg.push_back({pick[i].colour, pick[i].outward, open_regions[i], open_regions[(i + 1) % n2]});
  return cfg;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                              s[pos] == '\''))
      ++pos;
    if (pos == start) fail("expected a token");
    return s.substr(start, pos - start);
  }
};

}  // namespace

TangleDiagram parse_diagram(const std::string& text) {
  Parser p(text);
  TangleDiagram d;
  p.expect('{');
  p.expect('{');
  d.open_regions.push_back(p.token());
  while (p.peek(',')) {
    p.expect(',');
    d.open_regions.push_back(p.token());
  }
  p.expect('}');
  while (p.peek(',')) {
    p.expect(',');
    p.expect('{');
    std::vector<std::string> items;
    items.push_back(p.token());
    while (p.peek(',')) {
      p.expect(',');
      items.push_back(p.token());
    }
    p.expect('}');
    if (items.size() != 7)
      p.fail("crossing row has " + std::to_string(items.size()) + " entries, expected 7");
    CrossingRecord c;
    for (int i = 0; i < 4; ++i) c.quadrants[i] = items[i];
    if (items[4] == "L")
      c.sign = Sign::L;
    else if (items[4] == "R")
      c.sign = Sign::R;
    else
      p.fail("crossing sign must be L or R, got '" + items[4] + "'");
    c.over = items[5];
    c.under = items[6];
    d.crossings.push_back(c);
  }
  p.expect('}');
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return d;
}

std::string serialise(const TangleDiagram& d) {
  std::ostringstream os;
  os << "{{";
  for (std::size_t i = 0; i < d.open_regions.size(); ++i) {
    if (i) os << ", ";
    os << d.open_regions[i];
  }
  os << "}";
  for (const auto& c : d.crossings) {
    os << ", {" << c.quadrants[0] << ", " << c.quadrants[1] << ", " << c.quadrants[2] << ", "
       << c.quadrants[3] << ", " << (c.sign == Sign::L ? "L" : "R") << ", " << c.over << ", "
       << c.under << "}";
  }
  os << "}";
  return os.str();
}

ValidationReport validate_diagram(const TangleDiagram& d) {
  ValidationReport rep;
  if (d.crossings.empty()) rep.errors.push_back("no crossings");
  if (d.open_regions.empty() || d.open_regions.size() % 2 != 0)
    rep.errors.push_back("number of open regions must be even and positive");
  {
    std::set<std::string> seen;
    for (const auto& o : d.open_regions)
      if (!seen.insert(o).second) rep.errors.push_back("open region listed twice: " + o);
  }
  std::set<std::string> cols;
  for (const auto& c : d.crossings) {
    cols.insert(c.over);
    cols.insert(c.under);
  }
  // Dangling regions: used in exactly one quadrant, not open, and breaking
  // the face count. (A closed region on a single quadrant is legitimate when
  // it is a capped-off or kink face, in which case the Euler count works out.)
  std::map<std::string, int> uses;
  for (const auto& c : d.crossings)
    for (const auto& q : c.quadrants) ++uses[q];
  {
    int m = static_cast<int>(d.crossings.size());
    int n = d.strand_count();
    int r = static_cast<int>(d.regions().size());
    if (r != m + n + 1)
      for (const auto& [reg, cnt] : uses)
        if (cnt == 1 && !d.is_open(reg)) rep.errors.push_back("dangling region: " + reg);
  }
  for (const auto& o : d.open_regions)
    if (!uses.count(o)) rep.errors.push_back("open region never used at a crossing: " + o);
  if (!rep.errors.empty()) return rep;

  // Connectivity of the crossing-region incidence graph.
  if (!d.crossings.empty()) {
    std::set<std::string> reached;
    std::vector<int> stack = {0};
    std::set<int> seen_x = {0};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (const auto& q : d.crossings[c].quadrants) {
        if (!reached.insert(q).second) continue;
        for (int c2 = 0; c2 < static_cast<int>(d.crossings.size()); ++c2) {
          if (seen_x.count(c2)) continue;
          for (const auto& q2 : d.crossings[c2].quadrants)
            if (q2 == q) {
              seen_x.insert(c2);
              stack.push_back(c2);
              break;
            }
        }
      }
    }
    if (seen_x.size() != d.crossings.size()) rep.errors.push_back("diagram is disconnected");
  }

  // Boundary endpoints: one between each pair of consecutive open regions,
  // and per colour equally many in and out.
  try {
    auto cfg = d.boundary_config();
    std::map<std::string, int> net;
    for (const auto& e : cfg) net[e.colour] += e.outward ? 1 : -1;
    for (const auto& [c, n] : net)
      if (n != 0) rep.errors.push_back("colour " + c + " has unequal in/out endpoint counts");
  } catch (const std::exception& ex) {
    rep.errors.push_back(ex.what());
  }

  // Euler count; only holds when all faces are discs, so a mismatch is a
  // warning (the Alexander polynomial of such a diagram vanishes).
  int m = static_cast<int>(d.crossings.size());
  int n = d.strand_count();
  int r = static_cast<int>(d.regions().size());
  if (r != m + n + 1)
    rep.warnings.push_back("Euler mismatch: " + std::to_string(r) + " regions, expected " +
                           std::to_string(m + n + 1));
  return rep;
}

TangleDiagram mirror(const TangleDiagram& d) {
  TangleDiagram r = d;
  for (auto& c : r.crossings) {
    c.sign = flipped(c.sign);
    std::swap(c.over, c.under);
  }
  return r;
}

TangleDiagram reverse_strands(const TangleDiagram& d, const std::set<std::string>& cols) {
  for (const auto& c : cols)
    if (!d.colours().count(c)) throw std::runtime_error("unknown colour: " + c);
  TangleDiagram r = d;
  for (auto& x : r.crossings) {
    bool ro = cols.count(x.over) > 0;
    bool ru = cols.count(x.under) > 0;
    int rot = 0;
    if (ro && ru) {
      rot = 2;
    } else if (ro) {
      rot = (x.sign == Sign::L) ? 1 : 3;
      x.sign = flipped(x.sign);
    } else if (ru) {
      rot = (x.sign == Sign::L) ? 3 : 1;
      x.sign = flipped(x.sign);
    }
    if (rot) {
      std::array<std::string, 4> q;
      for (int i = 0; i < 4; ++i) q[i] = x.quadrants[(i + rot) % 4];
      x.quadrants = q;
    }
  }
  return r;
}

namespace {

std::string fresh_region(const std::set<std::string>& taken, const std::string& stem) {
  for (int i = 1;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

}  // namespace

TangleDiagram add_twist(const TangleDiagram& d, const std::string& open_region, Sign sign) {
  auto it = std::find(d.open_regions.begin(), d.open_regions.end(), open_region);
  if (it == d.open_regions.end()) throw std::runtime_error("region not open: " + open_region);
  int i = static_cast<int>(it - d.open_regions.begin());
  int n2 = static_cast<int>(d.open_regions.size());
  auto cfg = d.boundary_config();
  // cfg[j] sits between open_regions[j] and open_regions[j+1]; anticlockwise
  // order means the endpoint after region i in v0 is on its left.
  const BoundaryEndpoint& e_right = cfg[(i - 1 + n2) % n2];  // between o_{i-1} and o_i
  const BoundaryEndpoint& e_left = cfg[i];                   // between o_i and o_{i+1}
  const std::string& o_prev = d.open_regions[(i - 1 + n2) % n2];
  const std::string& o_next = d.open_regions[(i + 1) % n2];
  std::string r_new = fresh_region(d.regions(), "r");

  CrossingRecord c;
  bool l_out = e_left.outward, r_out = e_right.outward;
  bool over_is_left;
  if (l_out && r_out) {
    c.quadrants = {r_new, o_next, open_region, o_prev};
    over_is_left = (sign == Sign::L);
  } else if (!l_out && !r_out) {
    c.quadrants = {open_region, o_prev, r_new, o_next};
    over_is_left = (sign == Sign::L);
  } else if (l_out && !r_out) {
    c.quadrants = {o_prev, r_new, o_next, open_region};
    over_is_left = (sign != Sign::L);
  } else {
    c.quadrants = {o_next, open_region, o_prev, r_new};
    over_is_left = (sign != Sign::L);
  }
  c.over = over_is_left ? e_left.colour : e_right.colour;
  c.under = over_is_left ? e_right.colour : e_left.colour;
  c.sign = sign;

  TangleDiagram r = d;
  r.crossings.push_back(c);
  r.open_regions[i] = r_new;
  return r;
}

TangleDiagram cap_off(const TangleDiagram& d, const std::string& open_region) {
  if (d.open_regions.size() < 4) throw std::runtime_error("cap_off needs at least 4 endpoints");
  auto it = std::find(d.open_regions.begin(), d.open_regions.end(), open_region);
  if (it == d.open_regions.end()) throw std::runtime_error("region not open: " + open_region);
  int i = static_cast<int>(it - d.open_regions.begin());
  int n2 = static_cast<int>(d.open_regions.size());
  auto cfg = d.boundary_config();
  const BoundaryEndpoint& e1 = cfg[(i - 1 + n2) % n2];
  const BoundaryEndpoint& e2 = cfg[i];
  if (e1.outward == e2.outward)
    throw std::runtime_error("cap_off: endpoints at " + open_region +
                             " have incompatible orientations");
  std::string keep = d.open_regions[(i - 1 + n2) % n2];
  std::string gone = d.open_regions[(i + 1) % n2];
  std::string ckeep = std::min(e1.colour, e2.colour);
  std::string cgone = std::max(e1.colour, e2.colour);

  TangleDiagram r;
  for (int j = 0; j < n2; ++j) {
    if (j == i || d.open_regions[j] == gone) continue;
    r.open_regions.push_back(d.open_regions[j]);
  }
  r.crossings = d.crossings;
  for (auto& c : r.crossings) {
    for (auto& q : c.quadrants)
      if (q == gone) q = keep;
    if (c.over == cgone) c.over = ckeep;
    if (c.under == cgone) c.under = ckeep;
  }
  return r;
}

TangleDiagram rotate_y(const TangleDiagram& d) {
  TangleDiagram r;
  // Left-right flip reverses the anticlockwise boundary order; keep the
  // leftmost region (index 0) in place so 4-ended (a,b,c,d) becomes (c,b,a,d).
  int n2 = static_cast<int>(d.open_regions.size());
  r.open_regions.assign(n2, "");
  for (int i = 0; i < n2; ++i) r.open_regions[i] = d.open_regions[((n2 / 2) - i + n2) % n2];
  for (const auto& c : d.crossings) {
    CrossingRecord x;
    x.quadrants = {c.quadrants[0], c.quadrants[3], c.quadrants[2], c.quadrants[1]};
    x.sign = c.sign;
    x.over = c.under;
    x.under = c.over;
    r.crossings.push_back(x);
  }
  return r;
}

TangleDiagram rotate_x(const TangleDiagram& d) {
  TangleDiagram r;
  int n2 = static_cast<int>(d.open_regions.size());
  r.open_regions.assign(n2, "");
  for (int i = 0; i < n2; ++i) r.open_regions[i] = d.open_regions[(n2 - i) % n2];
  for (const auto& c : d.crossings) {
    CrossingRecord x;
    x.quadrants = {c.quadrants[0], c.quadrants[3], c.quadrants[2], c.quadrants[1]};
    x.sign = c.sign;
    x.over = c.under;
    x.under = c.over;
    r.crossings.push_back(x);
  }
  return r;
}

TangleDiagram glue_tangles(const TangleDiagram& d1, const TangleDiagram& d2, int k,
                           bool share_colours) {
  int n1 = static_cast<int>(d1.open_regions.size());
  int n2 = static_cast<int>(d2.open_regions.size());
  if (k < 0 || k >= n1 || k >= n2) throw std::runtime_error("glue_tangles: bad arc length");
  auto cfg1 = d1.boundary_config();
  auto cfg2 = d2.boundary_config();

  // Region identification: d1's x_i merges with d2's y_{k-i} for i = 0..k.
  std::map<std::string, std::string> reg2;  // d2 region -> new name
  for (int i = 0; i <= k; ++i) reg2[d2.open_regions[k - i]] = d1.open_regions[i];
  std::set<std::string> taken = d1.regions();
  for (const auto& r : d2.regions()) {
    if (reg2.count(r)) continue;
    std::string name = taken.count(r) ? fresh_region(taken, "s") : r;
    reg2[r] = name;
    taken.insert(name);
  }

  // Colour identification along matched endpoints: d1's endpoint between
  // x_i, x_{i+1} meets d2's endpoint between y_{k-i-1}, y_{k-i}. A glued
  // strand can chain through several old components, so the identification
  // is a union-find merge (d2 colours are marked to keep the two diagrams'
  // namespaces apart unless share_colours is set).
  auto tag2 = [&](const std::string& c) { return share_colours ? c : c + "\x01"; };
  std::map<std::string, std::string> parent;
  std::function<std::string(std::string)> rep = [&](std::string c) {
    while (parent.count(c) && parent[c] != c) c = parent[c];
    return c;
  };
  for (int i = 0; i < k; ++i) {
    const BoundaryEndpoint& e1 = cfg1[i];
    const BoundaryEndpoint& e2 = cfg2[k - i - 1];
    if (e1.outward == e2.outward)
      throw std::runtime_error("glue_tangles: endpoint orientations do not match");
    std::string a = rep(e1.colour), b = rep(tag2(e2.colour));
    // prefer a d1 name as the representative
    bool a_is_d1 = a.find('\x01') == std::string::npos;
    std::string keep = a_is_d1 ? a : b, drop = a_is_d1 ? b : a;
    parent[drop] = keep;
    parent[keep] = keep;
  }
  // resolve final names: d2-tagged classes with no d1 member get a fresh name
  std::set<std::string> cols1 = d1.colours();
  auto final_name = [&](const std::string& raw) {
    std::string r = rep(raw);
    if (r.find('\x01') == std::string::npos) return r;
    std::string base = r.substr(0, r.size() - 1);
    if (!cols1.count(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + "_" + std::to_string(i);
      if (!cols1.count(cand)) return cand;
    }
  };

  TangleDiagram g;
  for (int i = k; i < n1; ++i) g.open_regions.push_back(d1.open_regions[i]);
  g.open_regions.push_back(d1.open_regions[0]);
  for (int i = k + 1; i < n2; ++i) g.open_regions.push_back(reg2[d2.open_regions[i]]);
  for (const auto& c : d1.crossings) {
    CrossingRecord x = c;
    x.over = final_name(c.over);
    x.under = final_name(c.under);
    g.crossings.push_back(x);
  }
  for (const auto& c : d2.crossings) {
    CrossingRecord x;
    for (int i = 0; i < 4; ++i) x.quadrants[i] = reg2[c.quadrants[i]];
    x.sign = c.sign;
    x.over = final_name(tag2(c.over));
    x.under = final_name(tag2(c.under));
    g.crossings.push_back(x);
  }
  return g;
}

std::map<std::string, std::map<std::string, int>> region_windings(const TangleDiagram& d) {
  std::map<std::string, std::map<std::string, int>> w;
  if (d.open_regions.empty()) throw std::runtime_error("region_windings: no open regions");
  w[d.open_regions[0]] = {};
  std::vector<std::string> stack = {d.open_regions[0]};
  while (!stack.empty()) {
    std::string r = stack.back();
    stack.pop_back();
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
      for (int k = 0; k < 4; ++k) {
        StrandEnd e = d.end_at(c, k);
        const std::string& from = d.crossings[c].quadrants[k];
        const std::string& to = d.crossings[c].quadrants[(k + 1) % 4];
        int delta = e.outward ? 1 : -1;  // crossing right-to-left of the strand
        for (int dir = 0; dir < 2; ++dir) {
          const std::string& src = dir ? to : from;
          const std::string& dst = dir ? from : to;
          int dd = dir ? -delta : delta;
          if (src != r || w.count(dst)) continue;
          auto v = w[r];
          v[e.colour] += dd;
          if (v[e.colour] == 0) v.erase(e.colour);
          w[dst] = v;
          stack.push_back(dst);
        }
      }
    }
  }
  return w;
}

std::map<std::string, bool> chequerboard(const TangleDiagram& d) {
  std::map<std::string, bool> col;
  col[d.open_regions[0]] = false;
  std::vector<std::string> stack = {d.open_regions[0]};
  while (!stack.empty()) {
    std::string r = stack.back();
    stack.pop_back();
    for (const auto& c : d.crossings) {
      for (int k = 0; k < 4; ++k) {
        const std::string& a = c.quadrants[k];
        const std::string& b = c.quadrants[(k + 1) % 4];
        for (int dir = 0; dir < 2; ++dir) {
          const std::string& src = dir ? b : a;
          const std::string& dst = dir ? a : b;
          if (src != r) continue;
          auto it = col.find(dst);
          if (it == col.end()) {
            col[dst] = !col[r];
            stack.push_back(dst);
          } else if (it->second == col[r]) {
            throw std::runtime_error("diagram is not chequerboard-colourable");
          }
        }
      }
    }
  }
  return col;
}

}  // namespace tfk
