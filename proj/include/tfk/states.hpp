#ifndef TFK_STATES_HPP
#define TFK_STATES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tfk/diagram.hpp"

namespace tfk {

// Marker assignment, one quadrant index (0..3) per crossing.
struct KauffmanState {
  std::vector<int> marker;
  bool operator==(const KauffmanState& o) const { return marker == o.marker; }
  bool operator<(const KauffmanState& o) const { return marker < o.marker; }
};

// A site is the sorted list of occupied open regions (n-1 of them).
using Site = std::vector<std::string>;

std::string site_word(const Site& s);
Site site_of(const TangleDiagram& d, const KauffmanState& x);
bool state_is_valid(const TangleDiagram& d, const KauffmanState& x);

// Exhaustive, duplicate-free enumeration; states per site are sorted by
// marker vector. Throws if more than max_states states would be produced.
std::map<Site, std::vector<KauffmanState>> enumerate_states(const TangleDiagram& d,
                                                            std::size_t max_states = 10000000);

struct TranspositionMove {
  int crossing_a = 0;  // marker moves r1 -> r2 here
  int crossing_b = 0;  // marker moves r2 -> r1 here
  std::string r1, r2;
  bool clockwise = false;
};

// Complete list of moves available from x. Candidate marker pairs sitting in
// two shared regions but in non-adjacent quadrants are not moves; they are
// counted separately so lattice_report can surface them.
std::vector<TranspositionMove> transposition_moves(const TangleDiagram& d, const KauffmanState& x,
                                                   int* degenerate_candidates = nullptr);

KauffmanState apply_move(const TangleDiagram& d, const KauffmanState& x,
                         const TranspositionMove& m);

// The unique state of the site admitting no anticlockwise move.
KauffmanState clocked_state(const TangleDiagram& d, const Site& s);
// The unique state admitting no clockwise move.
KauffmanState counterclocked_state(const TangleDiagram& d, const Site& s);

struct LatticeReport {
  std::size_t states = 0;
  bool connected = false;
  bool acyclic = false;
  int top_count = 0;     // states with no anticlockwise move
  int bottom_count = 0;  // states with no clockwise move
  bool lattice_checked = false;
  bool is_lattice = false;
  int degenerate_candidates = 0;
  std::string str() const;
};

LatticeReport lattice_report(const TangleDiagram& d, const Site& s,
                             std::size_t full_check_limit = 12);

// The g(x) word: labels of occupied regions in crossing order.
std::string state_word(const TangleDiagram& d, const KauffmanState& x);

}  // namespace tfk

#endif
