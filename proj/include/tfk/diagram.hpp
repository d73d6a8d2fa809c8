#ifndef TFK_DIAGRAM_HPP
#define TFK_DIAGRAM_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tfk {

enum class Sign { L, R };  // L = positive crossing, R = negative

inline Sign flipped(Sign s) { return s == Sign::L ? Sign::R : Sign::L; }

struct CrossingRecord {
  std::array<std::string, 4> quadrants;  // index 0 = region between the two
                                         // outward arrows, then anticlockwise
  Sign sign = Sign::L;
  std::string over;
  std::string under;
};

// One of the four strand ends at a crossing. End k lies between quadrant k
// and quadrant k+1 (0-indexed, cyclic).
struct StrandEnd {
  int crossing = 0;
  int end = 0;        // 0..3
  bool outward = false;
  bool over_role = false;
  std::string colour;
  std::string left;   // region on the left of the strand direction
  std::string right;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
  bool clean() const { return errors.empty() && warnings.empty(); }
  std::string str() const;
};

struct BoundaryEndpoint {
  std::string colour;
  bool outward = false;
  std::string region_before;  // open region preceding anticlockwise
  std::string region_after;
};

struct TangleDiagram {
  std::vector<std::string> open_regions;  // anticlockwise
  std::vector<CrossingRecord> crossings;

  int strand_count() const { return static_cast<int>(open_regions.size()) / 2; }
  std::set<std::string> regions() const;
  std::set<std::string> closed_regions() const;
  std::set<std::string> colours() const;
  bool is_open(const std::string& r) const;

  // The four strand ends of crossing c, k = 0..3.
  StrandEnd end_at(int c, int k) const;
  // Ends that are tangle endpoints (not matched to another crossing),
  // in anticlockwise boundary order; cfg[i] sits between open_regions[i]
  // and open_regions[i+1].
  std::vector<BoundaryEndpoint> boundary_config() const;
};

// v-format parser; throws std::runtime_error with position info on bad input.
TangleDiagram parse_diagram(const std::string& text);
std::string serialise(const TangleDiagram& d);

ValidationReport validate_diagram(const TangleDiagram& d);

TangleDiagram add_twist(const TangleDiagram& d, const std::string& open_region, Sign sign);
TangleDiagram mirror(const TangleDiagram& d);
TangleDiagram reverse_strands(const TangleDiagram& d, const std::set<std::string>& cols);
TangleDiagram cap_off(const TangleDiagram& d, const std::string& open_region);

// Rotation of a tangle about the vertical axis in the projection plane
// (left-right flip with all crossings switched). Used to build mutants.
TangleDiagram rotate_y(const TangleDiagram& d);
// Rotation about the horizontal axis (top-bottom flip, crossings switched).
TangleDiagram rotate_x(const TangleDiagram& d);

// Glues d2 into the boundary of d1 along k strand endpoints: the endpoints
// between d1's open regions x_0..x_k are matched, in reverse order, with
// those between d2's open regions y_0..y_k. Matched endpoint pairs must have
// opposite in/out directions; their colours are identified (d1's name wins).
// Unmerged d2 regions are renamed s1, s2, ...; if share_colours is false,
// unmerged d2 colours that collide with d1's are renamed too.
TangleDiagram glue_tangles(const TangleDiagram& d1, const TangleDiagram& d2, int k,
                           bool share_colours = false);

// Winding index of each region: per colour, the number of signed strand
// crossings on a path from the first open region. Used by the determinant
// oracle and the chequerboard colouring.
std::map<std::string, std::map<std::string, int>> region_windings(const TangleDiagram& d);

// Two-colouring of regions with adjacent-across-a-strand regions opposite;
// first open region is white (false). Throws if the diagram is not
// chequerboard-colourable.
std::map<std::string, bool> chequerboard(const TangleDiagram& d);

}  // namespace tfk

#endif
