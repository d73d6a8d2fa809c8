#include "tfk/pairing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tfk {

namespace {
int mod4(int x) { return ((x - 1) % 4 + 4) % 4 + 1; }

std::map<std::string, int> alex2_sum(const std::map<std::string, int>& a,
                                     const std::map<std::string, int>& b) {
  std::map<std::string, int> r = a;
  for (const auto& [c, e] : b) {
    r[c] += e;
    if (r[c] == 0) r.erase(c);
  }
  return r;
}

std::string alex2_key(const std::map<std::string, int>& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, e] : a) {
    if (!first) os << " ";
    first = false;
    os << c << "^" << e;
  }
  return first ? "1" : os.str();
}
}  // namespace

int TypeAStructure::max_action_length() const {
  int m = 0;
  for (const auto& a : actions) m = std::max(m, static_cast<int>(a.sequence.size()));
  return m;
}

TypeAStructure closing_type_a(int site) {
  if (site < 1 || site > 4) throw std::runtime_error("closing_type_a: site must be 1..4");
  int k = site - 1;  // cyclic shift
  TypeAStructure A;
  A.site = site;
  auto sh = [&](const char* s) {
    BasisPath p = parse_path(s);
    return BasisPath{mod4(p.start + k), p.len};
  };
  std::string s1(1, "abcd"[site - 1]);
  std::string s2(1, "abcd"[mod4(site + 1) - 1]);
  A.gens.push_back({s1 + "1", site, 1});                 // a1
  A.gens.push_back({s1 + "2", site, 1});                 // a2
  A.gens.push_back({s2 + "1", mod4(site + 1), 2});       // b1
  A.gens.push_back({s2 + "2", mod4(site + 1), 0});       // b2
  int a1 = 0, a2 = 1, b1 = 2, b2 = 3;
  A.actions.push_back({b2, {}, b1});                     // mu_1
  A.actions.push_back({b2, {sh("p21"), sh("q12")}, b1});
  A.actions.push_back({a1, {sh("q2")}, b1});
  A.actions.push_back({a2, {sh("p1"), sh("q12")}, b1});
  A.actions.push_back({a2, {sh("p1"), sh("q1")}, a1});
  A.actions.push_back({b2, {sh("p21"), sh("q1")}, a1});
  A.actions.push_back({b2, {sh("p2")}, a2});
  return A;
}

bool ChainComplexF2::d_squared_zero() const {
  for (std::size_t x = 0; x < gens.size(); ++x) {
    std::map<int, int> count;
    for (int y : out[x])
      for (int z : out[y]) ++count[z];
    for (const auto& [z, c] : count)
      if (c % 2 != 0) return false;
  }
  return true;
}

ChainComplexF2 box_tensor(const TypeAStructure& a, const PecModule& d) {
  if (has_identity_arrow(d))
    throw std::runtime_error("box_tensor: cancel identity arrows of the type D side first");
  if (!d.punctures) throw std::runtime_error("box_tensor: type D side carries no punctures");

  // The closing caps join the tangle ends at punctures (site, site+1) and
  // (site+2, site+3); the colours of joined strands become one component of
  // the closure, so their Alexander gradings are identified.
  std::map<std::string, std::string> merge;
  {
    const auto& at = d.punctures->at;
    auto unify = [&](int i, int j) {
      std::string x = at[i - 1].colour, y = at[j - 1].colour;
      auto root = [&](std::string c) {
        while (merge.count(c) && merge[c] != c) c = merge[c];
        return c;
      };
      x = root(x);
      y = root(y);
      std::string lo = std::min(x, y), hi = std::max(x, y);
      merge[hi] = lo;
      merge[lo] = lo;
    };
    unify(a.site, mod4(a.site + 1));
    unify(mod4(a.site + 2), mod4(a.site + 3));
  }
  auto merged = [&](const std::map<std::string, int>& v) {
    std::map<std::string, int> r;
    for (const auto& [c, e] : v) {
      std::string x = c;
      while (merge.count(x) && merge[x] != x) x = merge[x];
      r[x] += e;
      if (r[x] == 0) r.erase(x);
    }
    return r;
  };
  PunctureOrientation po = *d.punctures;
  for (auto& e : po.at) {
    std::string x = e.colour;
    while (merge.count(x) && merge[x] != x) x = merge[x];
    e.colour = x;
  }

  // Alexander gradings of the type A generators, solved from the actions so
  // the box differential preserves the grading. Anchored at zero for the
  // generator with delta2 == 0 (b2 in the closing structure).
  std::vector<std::map<std::string, int>> alexA(a.gens.size());
  std::vector<bool> known(a.gens.size(), false);
  // anchor: first generator with delta2 == 0
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i].delta2 == 0 && !known[i]) {
      known[i] = true;
      break;
    }
  // The action m(x; sigma) = y consumes the algebra that the type D side
  // emits, so along a box differential component A(y) = A(x) + A(sigma).
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& act : a.actions) {
      std::map<std::string, int> w;
      for (const auto& b : act.sequence) w = alex2_sum(w, po.alexander_of(b));
      if (known[act.src] && !known[act.dst]) {
        alexA[act.dst] = alex2_sum(alexA[act.src], w);
        known[act.dst] = true;
        progress = true;
      } else if (known[act.dst] && !known[act.src]) {
        std::map<std::string, int> neg;
        for (const auto& [c, e] : w) neg[c] = -e;
        alexA[act.src] = alex2_sum(alexA[act.dst], neg);
        known[act.src] = true;
        progress = true;
      } else if (known[act.src] && known[act.dst]) {
        if (alexA[act.dst] != alex2_sum(alexA[act.src], w))
          throw std::runtime_error("box_tensor: inconsistent type A Alexander gradings");
      }
    }
  }
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (!known[i]) throw std::runtime_error("box_tensor: disconnected type A structure");

  ChainComplexF2 c;
  std::map<std::pair<int, int>, int> index;  // (A-gen, D-gen) -> box index
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    for (std::size_t v = 0; v < d.gens.size(); ++v) {
      if (a.gens[i].site != d.gens[v].site) continue;
      index[{static_cast<int>(i), static_cast<int>(v)}] = static_cast<int>(c.gens.size());
      c.gens.push_back({a.gens[i].name + "|" + d.gens[v].name,
                        alex2_sum(alexA[i], merged(d.gens[v].alex2)),
                        a.gens[i].delta2 + d.gens[v].delta2});
    }
  std::vector<std::map<int, int>> diff(c.gens.size());

  // paths in D of bounded length, matching sequences of basis labels
  int L = a.max_action_length();
  struct PathHit {
    int dst;
    std::vector<BasisPath> word;
  };
  auto d_paths_from = [&](int v) {
    std::vector<PathHit> hits;
    std::function<void(int, std::vector<BasisPath>&)> rec = [&](int cur,
                                                                std::vector<BasisPath>& word) {
      if (!word.empty()) hits.push_back({cur, word});
      if (static_cast<int>(word.size()) >= L) return;
      for (std::size_t w = 0; w < d.gens.size(); ++w) {
        PecElement e = d.arrow(cur, static_cast<int>(w));
        for (const auto& b : e.paths) {
          word.push_back(b);
          rec(static_cast<int>(w), word);
          word.pop_back();
        }
      }
    };
    std::vector<BasisPath> word;
    rec(v, word);
    return hits;
  };

  for (std::size_t v = 0; v < d.gens.size(); ++v) {
    auto hits = d_paths_from(static_cast<int>(v));
    for (const auto& act : a.actions) {
      if (act.sequence.empty()) {
        // mu_1 (x) identity path
        auto it = index.find({act.src, static_cast<int>(v)});
        auto jt = index.find({act.dst, static_cast<int>(v)});
        if (it != index.end() && jt != index.end()) ++diff[it->second][jt->second];
        continue;
      }
      for (const auto& hit : hits) {
        if (hit.word != act.sequence) continue;
        auto it = index.find({act.src, static_cast<int>(v)});
        auto jt = index.find({act.dst, hit.dst});
        if (it != index.end() && jt != index.end()) ++diff[it->second][jt->second];
      }
    }
  }

  c.out.resize(c.gens.size());
  for (std::size_t x = 0; x < diff.size(); ++x)
    for (const auto& [y, n] : diff[x])
      if (n % 2) c.out[x].push_back(y);

  for (std::size_t x = 0; x < c.out.size(); ++x)
    for (int y : c.out[x]) {
      if (c.gens[x].alex2 != c.gens[y].alex2)
        throw std::runtime_error("box_tensor: differential breaks the Alexander grading");
      if (c.gens[y].delta2 - c.gens[x].delta2 != 2)
        throw std::runtime_error("box_tensor: differential has wrong delta degree");
    }
  if (!c.d_squared_zero()) throw std::runtime_error("box_tensor: d^2 is nonzero");
  return c;
}

namespace {

int f2_rank(std::vector<std::vector<bool>>& mat) {
  int rank = 0;
  std::size_t rows = mat.size();
  std::size_t cols = rows ? mat[0].size() : 0;
  std::size_t rr = 0;
  for (std::size_t col = 0; col < cols && rr < rows; ++col) {
    std::size_t pivot = rr;
    while (pivot < rows && !mat[pivot][col]) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[pivot], mat[rr]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != rr && mat[i][col])
        for (std::size_t j = 0; j < cols; ++j) mat[i][j] = mat[i][j] != mat[rr][j];
    ++rr;
    ++rank;
  }
  return rank;
}

}  // namespace

int homology_total(const ChainComplexF2& c) {
  if (!c.d_squared_zero()) throw std::runtime_error("homology: d^2 is nonzero");
  std::size_t n = c.gens.size();
  std::vector<std::vector<bool>> mat(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (int y : c.out[x]) mat[x][y] = true;
  int r = f2_rank(mat);
  return static_cast<int>(n) - 2 * r;
}

HomologyTable homology(const ChainComplexF2& c) {
  if (!c.d_squared_zero()) throw std::runtime_error("homology: d^2 is nonzero");
  // Group generators by (Alexander, delta2); the differential maps the
  // (A, t) block to (A, t+2). rank H = dim - rank d|from - rank d|into.
  std::map<std::pair<std::string, int>, std::vector<int>> blocks;
  for (std::size_t i = 0; i < c.gens.size(); ++i)
    blocks[{alex2_key(c.gens[i].alex2), c.gens[i].delta2}].push_back(static_cast<int>(i));

  auto block_rank = [&](const std::vector<int>& rows) {
    // rank over F2 of the differential restricted to these sources
    std::map<int, int> col_of;
    std::vector<std::vector<bool>> mat;
    for (int r : rows) {
      std::vector<bool> row;
      for (int y : c.out[r]) {
        if (!col_of.count(y)) col_of[y] = static_cast<int>(col_of.size());
        std::size_t need = col_of[y] + 1;
        if (row.size() < need) row.resize(need, false);
        row[col_of[y]] = true;
      }
      mat.push_back(row);
    }
    std::size_t cols = col_of.size();
    for (auto& row : mat) row.resize(cols, false);
    int rank = 0;
    std::size_t rr = 0;
    for (std::size_t col = 0; col < cols && rr < mat.size(); ++col) {
      std::size_t pivot = rr;
      while (pivot < mat.size() && !mat[pivot][col]) ++pivot;
      if (pivot == mat.size()) continue;
      std::swap(mat[pivot], mat[rr]);
      for (std::size_t i = 0; i < mat.size(); ++i)
        if (i != rr && mat[i][col])
          for (std::size_t j = 0; j < cols; ++j) mat[i][j] = mat[i][j] != mat[rr][j];
      ++rr;
      ++rank;
    }
    return rank;
  };

  HomologyTable t;
  for (const auto& [key, rows] : blocks) {
    int dim = static_cast<int>(rows.size());
    int out_rank = block_rank(rows);
    // rank of the differential coming in from (A, delta2 - 2)
    auto prev = blocks.find({key.first, key.second - 2});
    int in_rank = 0;
    if (prev != blocks.end()) in_rank = block_rank(prev->second);
    int h = dim - out_rank - in_rank;
    if (h < 0) throw std::runtime_error("homology: negative rank, grading bug");
    if (h > 0) {
      t.ranks[{key.first, key.second}] = h;
      t.total += h;
    }
  }
  return t;
}

std::string HomologyTable::tsv() const {
  std::ostringstream os;
  os << "alexander\tdelta2\trank\n";
  for (const auto& [k, r] : ranks) os << k.first << "\t" << k.second << "\t" << r << "\n";
  os << "total\t\t" << total << "\n";
  return os.str();
}

GradedPoly complex_euler(const ChainComplexF2& c) {
  // h4 = sum of Alexander exponents - 2 delta2, as in the type D module case
  GradedPoly out;
  if (c.gens.empty()) return out;
  int base = 0;
  bool first = true;
  for (const auto& g : c.gens) {
    int a = 0;
    for (const auto& [col, e] : g.alex2) a += e;
    int h4 = a - 2 * g.delta2;
    if (first || h4 < base) base = h4;
    first = false;
  }
  for (const auto& g : c.gens) {
    int a = 0;
    for (const auto& [col, e] : g.alex2) a += e;
    int h4 = a - 2 * g.delta2;
    if ((h4 - base) % 4 != 0)
      throw std::runtime_error("complex_euler: inconsistent homological grading");
    Monomial m;
    for (const auto& [col, e] : g.alex2) m.set(col, e);
    out = out + GradedPoly::term(m, ((h4 - base) / 4) % 2 == 0 ? 1 : -1);
  }
  return out;
}

ChainComplexF2 lazy_closing(const PecModule& m, int site) {
  // Letters kept (set to 1) when closing at sites (site, site+2):
  // p_site, p_{site+1}, q_{site+2}, q_{site+3}; the rest are set to 0.
  std::set<std::string> keep = {"p" + std::to_string(site),
                                "p" + std::to_string(mod4(site + 1)),
                                "q" + std::to_string(mod4(site + 2)),
                                "q" + std::to_string(mod4(site + 3))};
  ChainComplexF2 c;
  for (const auto& g : m.gens) c.gens.push_back({g.name, g.alex2, g.delta2});
  c.out.resize(c.gens.size());
  std::map<std::pair<int, int>, int> count;
  for (const auto& [k, e] : m.arrows) {
    for (const auto& b : e.paths) {
      bool survives = true;
      int steps = b.len > 0 ? b.len : -b.len;
      int node = b.start;
      for (int i = 0; i < steps && survives; ++i) {
        int letter_node = (b.len > 0) ? mod4(node + 1) : node;
        std::string letter = (b.len > 0 ? "q" : "p") + std::to_string(letter_node);
        if (!keep.count(letter)) survives = false;
        node = mod4(node + (b.len > 0 ? 1 : -1));
      }
      if (b.is_idempotent()) survives = true;  // unit maps to 1
      if (survives) ++count[k];
    }
  }
  for (const auto& [k, n] : count)
    if (n % 2) c.out[k.first].push_back(k.second);
  for (auto& v : c.out) std::sort(v.begin(), v.end());
  if (!c.d_squared_zero()) throw std::runtime_error("lazy_closing: d^2 is nonzero");
  return c;
}

std::string CloseReport::str() const {
  std::ostringstream os;
  os << "box pairing:\n" << box.tsv() << "lazy closing:\n" << lazy.tsv();
  os << "consistent: " << (consistent ? "yes" : "no") << "\n";
  return os.str();
}

CloseReport close_tangle(const PecModule& m, int site) {
  CloseReport rep;
  PecModule reduced = cancel_all_identities(m);
  rep.box = homology(box_tensor(closing_type_a(site), reduced));
  rep.lazy.total = homology_total(lazy_closing(reduced, site));
  int b = rep.box.total, l = rep.lazy.total;
  rep.consistent = (b == l) || (b == 2 * l) || (l == 2 * b);
  return rep;
}

}  // namespace tfk
