#ifndef TFK_PECALG_HPP
#define TFK_PECALG_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tfk {

// A basis path of the peculiar quiver algebra: an oriented interval on the
// 4-periodic line, canonicalised so the start node lies in 1..4. Positive
// length walks the q-cycle (1 -> 2 -> 3 -> 4 -> 1), negative length the
// p-cycle (1 -> 4 -> 3 -> 2 -> 1); length 0 is the idempotent at the node.
struct BasisPath {
  int start = 1;  // 1..4
  int len = 0;    // signed

  int end() const;  // 1..4
  bool is_idempotent() const { return len == 0; }
  bool operator==(const BasisPath& o) const { return start == o.start && len == o.len; }
  bool operator<(const BasisPath& o) const {
    return start != o.start ? start < o.start : len < o.len;
  }
};

BasisPath idempotent(int node);
BasisPath q_path(int from, int steps);  // steps > 0
BasisPath p_path(int from, int steps);

// Concatenation a then b; zero (false) unless a ends where b starts and the
// orientations agree.
bool multiply(const BasisPath& a, const BasisPath& b, BasisPath& out);

std::string path_str(const BasisPath& p);  // p214, q341, i3
BasisPath parse_path(const std::string& s);

// F2 linear combination of basis paths.
struct PecElement {
  std::set<BasisPath> paths;

  static PecElement zero() { return {}; }
  static PecElement of(const BasisPath& p) { return {{p}}; }
  bool is_zero() const { return paths.empty(); }
  void toggle(const BasisPath& p);
  PecElement operator+(const PecElement& o) const;  // F2 sum
  PecElement operator*(const PecElement& o) const;
  bool operator==(const PecElement& o) const { return paths == o.paths; }
  bool operator<(const PecElement& o) const { return paths < o.paths; }
  std::string str() const;
};

PecElement parse_element(const std::string& s);  // sums joined by '+'

// The curvature p^4 + q^4: all eight length-4 cycles.
PecElement curvature();

// Orientation and colouring of the four punctures; per colour the numbers of
// in and out punctures must agree.
struct PunctureOrientation {
  struct Entry {
    std::string colour;
    bool in = false;
  };
  std::array<Entry, 4> at;  // index 0 = puncture 1

  std::map<std::string, int> alexander_of(const BasisPath& p) const;  // doubled
};

// delta-grading, doubled (so the unit of measure matches the rest of the
// library): half the interval length, times two.
int delta2_of(const BasisPath& p);

std::vector<BasisPath> all_paths(int max_len);  // idempotents included

}  // namespace tfk

#endif
