#include "tfk/alexander.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tfk {

GradedPoly label_of(const TangleDiagram& d, int crossing, int quadrant) {
  const CrossingRecord& c = d.crossings[crossing];
  Monomial m;
  auto bump = [&](const std::string& col, int e) { m.set(col, m.get(col) + e); };
  if (c.sign == Sign::L) {
    switch (quadrant) {
      case 0: bump(c.over, 1); bump(c.under, 1); m.d2 = 1; break;
      case 1: bump(c.over, 1); bump(c.under, -1); break;
      case 2: bump(c.over, -1); bump(c.under, -1); m.h = -1; m.d2 = 1; break;
      case 3: bump(c.over, -1); bump(c.under, 1); break;
      default: throw std::runtime_error("bad quadrant");
    }
  } else {
    switch (quadrant) {
      case 0: bump(c.over, -1); bump(c.under, -1); m.d2 = -1; break;
      case 1: bump(c.over, 1); bump(c.under, -1); break;
      case 2: bump(c.over, 1); bump(c.under, 1); m.h = 1; m.d2 = -1; break;
      case 3: bump(c.over, -1); bump(c.under, 1); break;
      default: throw std::runtime_error("bad quadrant");
    }
  }
  return GradedPoly::term(m);
}

GradedPoly state_label(const TangleDiagram& d, const KauffmanState& x) {
  GradedPoly p = GradedPoly::one();
  for (std::size_t c = 0; c < x.marker.size(); ++c)
    p = p * label_of(d, static_cast<int>(c), x.marker[c]);
  return p;
}

std::map<Site, GradedPoly> nabla_hat(const TangleDiagram& d) {
  std::map<Site, GradedPoly> out;
  for (const auto& [s, states] : enumerate_states(d)) {
    GradedPoly sum;
    for (const auto& x : states) sum = sum + state_label(d, x);
    out[s] = sum;
  }
  return out;
}

GradedPoly nabla(const TangleDiagram& d, const Site& s) {
  auto all = nabla_hat(d);
  auto it = all.find(s);
  if (it == all.end()) return GradedPoly::zero();
  return it->second.collapse_h_delta();
}

std::map<Site, GradedPoly> nabla_all(const TangleDiagram& d) {
  std::map<Site, GradedPoly> out;
  for (const auto& [s, p] : nabla_hat(d)) out[s] = p.collapse_h_delta();
  return out;
}

std::vector<GeneratorRow> generator_table(const TangleDiagram& d) {
  std::vector<GeneratorRow> rows;
  for (const auto& [s, states] : enumerate_states(d))
    for (const auto& x : states) rows.push_back({s, state_word(d, x), state_label(d, x)});
  return rows;
}

std::string generator_table_tsv(const TangleDiagram& d) {
  std::ostringstream os;
  os << "site\tword\tmonomial\n";
  for (const auto& r : generator_table(d))
    os << site_word(r.site) << "\t" << r.word << "\t" << r.monomial.str() << "\n";
  return os.str();
}

int linking_number2(const TangleDiagram& d, const std::string& c1, const std::string& c2) {
  if (c1 == c2) throw std::runtime_error("linking number needs two distinct colours");
  auto cols = d.colours();
  if (!cols.count(c1)) throw std::runtime_error("unknown colour: " + c1);
  if (!cols.count(c2)) throw std::runtime_error("unknown colour: " + c2);
  int n = 0;
  for (const auto& c : d.crossings) {
    bool both = (c.over == c1 && c.under == c2) || (c.over == c2 && c.under == c1);
    if (both) n += (c.sign == Sign::L) ? 1 : -1;
  }
  return n;
}

int total_linking_number2(const TangleDiagram& d, const std::string& t) {
  int n = 0;
  for (const auto& c : d.colours())
    if (c != t) n += linking_number2(d, t, c);
  return n;
}

namespace {

// Determinant by expansion over column subsets; fine for desk-scale matrices.
GradedPoly det_poly(const std::vector<std::vector<GradedPoly>>& a) {
  std::size_t n = a.size();
  if (n == 0) return GradedPoly::one();
  if (n > 20) throw std::runtime_error("determinant matrix too large");
  // minor[mask] = determinant of rows 0..popcount(mask)-1, columns in mask.
  std::vector<GradedPoly> cur(1, GradedPoly::one());
  std::vector<std::uint32_t> cur_masks = {0};
  std::map<std::uint32_t, GradedPoly> memo;
  memo[0] = GradedPoly::one();
  for (std::size_t r = 0; r < n; ++r) {
    std::map<std::uint32_t, GradedPoly> next;
    for (const auto& [mask, val] : memo) {
      if (val.is_zero()) continue;
      int sign = 1;
      for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t bit = 1u << c;
        if (mask & bit) {
          sign = -sign;
          continue;
        }
        if (!a[r][c].is_zero()) {
          GradedPoly add = a[r][c] * val;
          if (sign < 0) add = -add;
          auto [it, ins] = next.try_emplace(mask | bit, add);
          if (!ins) it->second = it->second + add;
        }
      }
    }
    memo.swap(next);
  }
  std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  auto it = memo.find(full);
  return it == memo.end() ? GradedPoly::zero() : it->second;
}

}  // namespace

GradedPoly nabla_via_determinant(const TangleDiagram& d, const Site& s) {
  // Rejects diagrams whose faces cannot be two-coloured.
  (void)chequerboard(d);

  std::vector<std::string> rows;
  for (const auto& r : d.regions()) {
    bool open_unoccupied = d.is_open(r) && std::find(s.begin(), s.end(), r) == s.end();
    if (!open_unoccupied) rows.push_back(r);
  }
  std::size_t m = d.crossings.size();
  if (rows.size() != m)
    throw std::runtime_error("determinant matrix is not square (" + std::to_string(rows.size()) +
                             " rows, " + std::to_string(m) + " columns)");
  std::map<std::string, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

  std::vector<std::vector<GradedPoly>> a(m, std::vector<GradedPoly>(m));
  for (std::size_t c = 0; c < m; ++c) {
    const CrossingRecord& x = d.crossings[c];
    // Attaching word of the 2-handle, as a column: quadrant weights are
    // 1, 1, o^-1, o^-1 for positive and o^-1, 1, 1, o^-1 for negative
    // crossings, with the meridian o written in whole-power variables (x^4).
    for (int k = 0; k < 4; ++k) {
      bool inv;
      if (x.sign == Sign::L)
        inv = (k == 2 || k == 3);
      else
        inv = (k == 0 || k == 3);
      auto it = row_index.find(x.quadrants[k]);
      if (it == row_index.end()) continue;
      Monomial w;
      if (inv) w.set(x.over, -4);
      a[it->second][c] = a[it->second][c] + GradedPoly::term(w);
    }
  }
  return det_poly(a);
}

std::string render_grid(const GradedPoly& p, const std::string& c1, const std::string& c2) {
  auto support = p.colour_support();
  for (const auto& c : support)
    if (c != c1 && c != c2)
      throw std::runtime_error("render_grid: polynomial uses colour " + c +
                               " beyond the two displayed");
  if (p.is_zero()) return "";

  // cell text per (e1, e2): list of coef*delta entries (h folded into coef sign
  // is not applied here; h is shown when present).
  std::map<std::pair<int, int>, std::string> cells;
  int min1 = 0, max1 = 0, min2 = 0, max2 = 0;
  bool first_term = true;
  for (const auto& [m, coef] : p.terms()) {
    int e1 = m.get(c1), e2 = m.get(c2);
    if (first_term) {
      min1 = max1 = e1;
      min2 = max2 = e2;
      first_term = false;
    }
    min1 = std::min(min1, e1), max1 = std::max(max1, e1);
    min2 = std::min(min2, e2), max2 = std::max(max2, e2);
    Monomial rest = m;
    rest.set(c1, 0);
    rest.set(c2, 0);
    std::string t = (rest == Monomial{} && coef == 1) ? "1" : GradedPoly::term(rest, coef).str();
    auto& cell = cells[{e1, e2}];
    if (!cell.empty()) cell += ",";
    cell += t;
  }
  min1 = std::min(min1, 0), max1 = std::max(max1, 0);
  min2 = std::min(min2, 0), max2 = std::max(max2, 0);

  std::vector<std::vector<std::string>> grid;
  for (int e1 = max1; e1 >= min1; --e1) {
    std::vector<std::string> row;
    row.push_back(c1 + "^" + std::to_string(e1));
    for (int e2 = min2; e2 <= max2; ++e2) {
      auto it = cells.find({e1, e2});
      std::string t = (it == cells.end()) ? "." : it->second;
      if (e1 == 0 && e2 == 0) t = "[" + t + "]";
      row.push_back(t);
    }
    grid.push_back(row);
  }
  std::vector<std::string> head;
  head.push_back("");
  for (int e2 = min2; e2 <= max2; ++e2) head.push_back(c2 + "^" + std::to_string(e2));
  grid.insert(grid.begin(), head);

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << row[j];
      if (j + 1 < row.size()) os << std::string(width[j] - row[j].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace tfk
