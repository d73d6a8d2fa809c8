#include "tfk/states.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tfk {

std::string site_word(const Site& s) {
  std::string w;
  for (const auto& r : s) w += r;
  return w.empty() ? "1" : w;
}

Site site_of(const TangleDiagram& d, const KauffmanState& x) {
  Site s;
  for (std::size_t c = 0; c < x.marker.size(); ++c) {
    const std::string& r = d.crossings[c].quadrants[x.marker[c]];
    if (d.is_open(r)) s.push_back(r);
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool state_is_valid(const TangleDiagram& d, const KauffmanState& x) {
  if (x.marker.size() != d.crossings.size()) return false;
  std::map<std::string, int> occ;
  for (std::size_t c = 0; c < x.marker.size(); ++c) {
    if (x.marker[c] < 0 || x.marker[c] > 3) return false;
    ++occ[d.crossings[c].quadrants[x.marker[c]]];
  }
  for (const auto& r : d.closed_regions())
    if (occ[r] != 1) return false;
  for (const auto& r : d.open_regions)
    if (occ[r] > 1) return false;
  return true;
}

std::map<Site, std::vector<KauffmanState>> enumerate_states(const TangleDiagram& d,
                                                            std::size_t max_states) {
  std::size_t m = d.crossings.size();
  std::set<std::string> closed = d.closed_regions();

  // Most-constrained-first: order crossings by how few distinct regions their
  // quadrants touch, closed regions first (they are the scarce resource).
  std::vector<int> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
  auto constraint = [&](int c) {
    std::set<std::string> qs(d.crossings[c].quadrants.begin(), d.crossings[c].quadrants.end());
    int closed_q = 0;
    for (const auto& q : qs) closed_q += closed.count(q) ? 1 : 0;
    return std::make_pair(-closed_q, static_cast<int>(qs.size()));
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return constraint(a) < constraint(b); });

  std::map<std::string, int> occ;  // region -> markers placed
  // closed regions must end at 1; track how many crossings could still feed
  // each closed region to prune dead branches.
  std::map<std::string, int> remaining;
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& q : std::set<std::string>(d.crossings[i].quadrants.begin(),
                                               d.crossings[i].quadrants.end()))
      if (closed.count(q)) ++remaining[q];

  std::map<Site, std::vector<KauffmanState>> out;
  std::size_t total = 0;
  KauffmanState x;
  x.marker.assign(m, -1);

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == m) {
      for (const auto& r : closed)
        if (occ[r] != 1) return;
      if (++total > max_states) throw std::runtime_error("state enumeration limit exceeded");
      out[site_of(d, x)].push_back(x);
      return;
    }
    int c = order[depth];
    std::set<std::string> qs(d.crossings[c].quadrants.begin(), d.crossings[c].quadrants.end());
    for (const auto& q : qs)
      if (closed.count(q)) --remaining[q];
    for (int k = 0; k < 4; ++k) {
      const std::string& r = d.crossings[c].quadrants[k];
      if (occ[r] >= 1) continue;
      // a closed region with no remaining feeders and no marker is dead
      bool dead = false;
      ++occ[r];
      for (const auto& q : qs) {
        if (!closed.count(q) || q == r) continue;
        if (occ[q] == 0 && remaining[q] == 0) {
          dead = true;
          break;
        }
      }
      if (!dead) {
        x.marker[c] = k;
        rec(depth + 1);
        x.marker[c] = -1;
      }
      --occ[r];
    }
    for (const auto& q : qs)
      if (closed.count(q)) ++remaining[q];
  };
  rec(0);
  for (auto& [s, v] : out) std::sort(v.begin(), v.end());
  return out;
}

std::vector<TranspositionMove> transposition_moves(const TangleDiagram& d, const KauffmanState& x,
                                                   int* degenerate_candidates) {
  std::vector<TranspositionMove> moves;
  int degen = 0;
  int m = static_cast<int>(d.crossings.size());
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const std::string& r1 = d.crossings[a].quadrants[x.marker[a]];
      const std::string& r2 = d.crossings[b].quadrants[x.marker[b]];
      if (r1 == r2) continue;
      // Both regions must be shared by both crossings.
      auto has = [&](int c, const std::string& r) {
        const auto& q = d.crossings[c].quadrants;
        return std::find(q.begin(), q.end(), r) != q.end();
      };
      if (!has(a, r2) || !has(b, r1)) continue;
      // Clockwise: both markers step one quadrant down (quadrants are listed
      // anticlockwise); anticlockwise: both step up.
      // The same move shows up with (a,b) and (r1,r2) swapped; keep the
      // representative with a < b.
      for (int dir : {-1, +1}) {
        int ka = (x.marker[a] + dir + 4) % 4;
        int kb = (x.marker[b] + dir + 4) % 4;
        if (d.crossings[a].quadrants[ka] == r2 && d.crossings[b].quadrants[kb] == r1 && a < b)
          moves.push_back({a, b, r1, r2, dir == -1});
      }
      // Degenerate candidate: markers in two shared regions, but no common
      // rotation direction moves both markers to the opposite region.
      if (a < b) {
        bool any = false;
        for (int dir : {-1, +1}) {
          int ka = (x.marker[a] + dir + 4) % 4;
          int kb = (x.marker[b] + dir + 4) % 4;
          if (d.crossings[a].quadrants[ka] == r2 && d.crossings[b].quadrants[kb] == r1) any = true;
        }
        if (!any) ++degen;
      }
    }
  }
  if (degenerate_candidates) *degenerate_candidates = degen;
  return moves;
}

KauffmanState apply_move(const TangleDiagram& d, const KauffmanState& x,
                         const TranspositionMove& m) {
  KauffmanState y = x;
  int dir = m.clockwise ? -1 : +1;
  y.marker[m.crossing_a] = (x.marker[m.crossing_a] + dir + 4) % 4;
  y.marker[m.crossing_b] = (x.marker[m.crossing_b] + dir + 4) % 4;
  if (!state_is_valid(d, y)) throw std::runtime_error("apply_move produced an invalid state");
  return y;
}

namespace {

KauffmanState run_to_extreme(const TangleDiagram& d, const Site& s, bool want_clockwise) {
  auto all = enumerate_states(d);
  auto it = all.find(s);
  if (it == all.end() || it->second.empty()) throw std::runtime_error("empty site");
  KauffmanState x = it->second.front();
  for (;;) {
    bool moved = false;
    for (const auto& m : transposition_moves(d, x)) {
      if (m.clockwise != want_clockwise) continue;
      x = apply_move(d, x, m);
      moved = true;
      break;
    }
    if (!moved) return x;
  }
}

}  // namespace

KauffmanState clocked_state(const TangleDiagram& d, const Site& s) {
  // The clocked state admits no anticlockwise move, so walk upwards.
  return run_to_extreme(d, s, false);
}

KauffmanState counterclocked_state(const TangleDiagram& d, const Site& s) {
  return run_to_extreme(d, s, true);
}

std::string LatticeReport::str() const {
  std::ostringstream os;
  os << "states=" << states << " connected=" << (connected ? "yes" : "no")
     << " acyclic=" << (acyclic ? "yes" : "no") << " tops=" << top_count
     << " bottoms=" << bottom_count;
  if (lattice_checked) os << " lattice=" << (is_lattice ? "yes" : "no");
  if (degenerate_candidates) os << " degenerate_candidates=" << degenerate_candidates;
  return os.str();
}

LatticeReport lattice_report(const TangleDiagram& d, const Site& s, std::size_t full_check_limit) {
  LatticeReport rep;
  auto all = enumerate_states(d);
  auto it = all.find(s);
  if (it == all.end()) return rep;
  const std::vector<KauffmanState>& states = it->second;
  rep.states = states.size();
  if (states.empty()) return rep;

  std::map<KauffmanState, int> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
  int n = static_cast<int>(states.size());
  std::vector<std::vector<int>> down(n);  // clockwise edges x -> y
  std::vector<int> in_deg(n, 0), out_deg(n, 0);
  for (int i = 0; i < n; ++i) {
    int degen = 0;
    for (const auto& m : transposition_moves(d, states[i], &degen)) {
      KauffmanState y = apply_move(d, states[i], m);
      int j = index.at(y);
      if (m.clockwise) {
        down[i].push_back(j);
        ++out_deg[i];
        ++in_deg[j];
      }
    }
    rep.degenerate_candidates += degen;
  }
  for (int i = 0; i < n; ++i) {
    if (in_deg[i] == 0) ++rep.top_count;
    if (out_deg[i] == 0) ++rep.bottom_count;
  }

  // Connectivity of the undirected move graph.
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> undirected(n);
  for (int i = 0; i < n; ++i)
    for (int j : down[i]) {
      undirected[i].push_back(j);
      undirected[j].push_back(i);
    }
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : undirected[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        q.push(w);
      }
  }
  rep.connected = (cnt == n);

  // Acyclicity via topological sort of the clockwise relation.
  {
    std::vector<int> deg = in_deg;
    std::queue<int> topo;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 0) topo.push(i);
    int done = 0;
    while (!topo.empty()) {
      int v = topo.front();
      topo.pop();
      ++done;
      for (int w : down[v])
        if (--deg[w] == 0) topo.push(w);
    }
    rep.acyclic = (done == n);
  }

  if (rep.acyclic && static_cast<std::size_t>(n) <= full_check_limit) {
    rep.lattice_checked = true;
    // reachability closure: below[i] = set of j with i >= j
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    std::function<void(int)> dfs = [&](int v) {
      if (below[v][v]) return;
      below[v][v] = true;
      for (int w : down[v]) {
        dfs(w);
        for (int k = 0; k < n; ++k)
          if (below[w][k]) below[v][k] = true;
      }
    };
    for (int i = 0; i < n; ++i) dfs(i);
    auto unique_extreme = [&](int i, int j, bool meet) {
      // meet: greatest common lower bound; join: least common upper bound
      std::vector<int> common;
      for (int k = 0; k < n; ++k) {
        bool ok = meet ? (below[i][k] && below[j][k]) : (below[k][i] && below[k][j]);
        if (ok) common.push_back(k);
      }
      if (common.empty()) return false;
      int best = -1;
      for (int k : common) {
        bool extreme = true;
        for (int l : common) {
          bool dominated = meet ? below[k][l] : below[l][k];
          if (!dominated) {
            extreme = false;
            break;
          }
        }
        if (extreme) {
          best = k;
          break;
        }
      }
      return best >= 0;
    };
    rep.is_lattice = true;
    for (int i = 0; i < n && rep.is_lattice; ++i)
      for (int j = i + 1; j < n && rep.is_lattice; ++j)
        if (!unique_extreme(i, j, true) || !unique_extreme(i, j, false)) rep.is_lattice = false;
  }
  return rep;
}

std::string state_word(const TangleDiagram& d, const KauffmanState& x) {
  std::string w;
  for (std::size_t c = 0; c < x.marker.size(); ++c) w += d.crossings[c].quadrants[x.marker[c]];
  return w;
}

}  // namespace tfk
