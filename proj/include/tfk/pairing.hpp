#ifndef TFK_PAIRING_HPP
#define TFK_PAIRING_HPP

#include <map>
#include <string>
#include <vector>

#include "tfk/pecmod.hpp"
#include "tfk/poly.hpp"

namespace tfk {

// Strictly unital type A structure over the peculiar algebra, given by its
// non-identity actions: m(src; sequence) = dst, plus the length-0
// differential mu_1 (empty sequence).
struct TypeAAction {
  int src = 0;
  std::vector<BasisPath> sequence;
  int dst = 0;
};

struct TypeAGenerator {
  std::string name;
  int site = 1;
  int delta2 = 0;
};

struct TypeAStructure {
  int site = 1;  // closing site; the caps join punctures (site, site+1) and
                 // (site+2, site+3), identifying their colours
  std::vector<TypeAGenerator> gens;
  std::vector<TypeAAction> actions;
  int max_action_length() const;
};

// The closing structure C(s) for s in 1..4 (a..d): four generators and the
// seven non-identity actions, shifted cyclically from the site-a model.
TypeAStructure closing_type_a(int site);

// F2 chain complex with (Alexander, delta) gradings; the differential raises
// delta2 by 2 and preserves the Alexander grading.
struct ChainComplexF2 {
  struct Gen {
    std::string name;
    std::map<std::string, int> alex2;
    int delta2 = 0;
  };
  std::vector<Gen> gens;
  std::vector<std::vector<int>> out;  // differential adjacency (sorted)

  bool d_squared_zero() const;
};

// Box tensor product A (x) D. D must have no identity arrows. Throws if the
// result fails d^2 = 0 or breaks the gradings.
ChainComplexF2 box_tensor(const TypeAStructure& a, const PecModule& d);

struct HomologyTable {
  std::map<std::pair<std::string, int>, int> ranks;  // (alexander, delta2) -> rank
  int total = 0;
  std::string tsv() const;
};

HomologyTable homology(const ChainComplexF2& c);
// Total rank without grading bookkeeping (the lazy closing weaves the
// stabilisation gradings into the complex, so only the total is graded-free).
int homology_total(const ChainComplexF2& c);

// Graded Euler characteristic of the complex: per Alexander grading, the
// signed count of generators, signs read from the homological grading.
GradedPoly complex_euler(const ChainComplexF2& c);

// The lazy closing of prop. "LazyClosing": sets half of the algebra letters
// to one and the rest to zero. site = 1 closes at a and c; site = 2 at b, d.
ChainComplexF2 lazy_closing(const PecModule& m, int site);

struct CloseReport {
  HomologyTable box;
  HomologyTable lazy;
  bool consistent = false;  // equal total ranks up to one V-stabilisation
  std::string str() const;
};

CloseReport close_tangle(const PecModule& m, int site);

}  // namespace tfk

#endif
