#ifndef TFK_PECMOD_HPP
#define TFK_PECMOD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfk/diagram.hpp"
#include "tfk/pecalg.hpp"
#include "tfk/poly.hpp"

namespace tfk {

// Generator of a curved type D structure: an idempotent (site 1..4, with
// 1,2,3,4 standing for a,b,c,d), a delta-grading and an Alexander
// multigrading, both doubled so they stay integral.
struct PecGenerator {
  std::string name;
  int site = 1;
  int delta2 = 0;
  std::map<std::string, int> alex2;
};

// Curved type D structure over the peculiar algebra. An arrow (src, dst)
// labelled by a basis path b means: the differential of src contains
// b (x) dst. Labels collect into F2 sets per (src, dst).
class PecModule {
 public:
  std::vector<PecGenerator> gens;
  std::map<std::pair<int, int>, PecElement> arrows;
  std::optional<PunctureOrientation> punctures;  // for Alexander checks

  int find(const std::string& name) const;
  void add_arrow(int src, int dst, const PecElement& label);  // F2 toggle
  PecElement arrow(int src, int dst) const;

  std::string str() const;
  std::string dot() const;
};

// Differential squares to the curvature p^4 + q^4 and every arrow label is
// idempotent-compatible.
bool check_curved(const PecModule& m, std::string* why = nullptr);
// Arrow degree: delta2(dst) + delta2(label) - delta2(src) = 2 and the
// Alexander grading is preserved along every arrow.
bool check_gradings(const PecModule& m, std::string* why = nullptr);

// Morphism of curved type D structures, components labelled like arrows.
struct PecMorphism {
  std::map<std::pair<int, int>, PecElement> comps;  // (src in M, dst in N)
  void add(int src, int dst, const PecElement& label);
  PecElement at(int src, int dst) const;
};

// D(f) = dN o f + f o dM over F2.
PecMorphism d_of_morphism(const PecModule& m, const PecModule& n, const PecMorphism& f);
// (g o f): first f, then g; labels multiply left-to-right along the path.
PecMorphism compose(const PecModule& m, const PecModule& n, const PecModule& o,
                    const PecMorphism& f, const PecMorphism& g);
PecMorphism identity_morphism(const PecModule& m);

// Removes the two endpoints of an identity-labelled arrow, composing the
// differential around them. Throws unless the arrow has an idempotent
// component and distinct endpoints.
PecModule cancel_arrow(const PecModule& m, int src, int dst);
// Repeats cancellation until no arrow label contains an idempotent.
PecModule cancel_all_identities(const PecModule& m);
bool has_identity_arrow(const PecModule& m, int* src = nullptr, int* dst = nullptr);

// Replaces the differential by d + D(h) for a self-homotopy h with
// h^2 = 0, h D(h) = 0, D(h) h = 0 (each reported separately on violation).
PecModule apply_homotopy(const PecModule& m, const PecMorphism& h);

// Disjoint union with block differential [[dM, 0], [f, dN]]; requires
// D(f) = 0 and components of the differential degree.
PecModule mapping_cone(const PecModule& m, const PecModule& n, const PecMorphism& f);

PecModule direct_sum(const PecModule& a, const PecModule& b);
PecModule shift_delta2(const PecModule& m, int delta2);
PecModule shift_alexander2(const PecModule& m, const std::string& colour, int amount2);

// Loop decomposition: succeeds iff the arrows pair into opposite-direction
// couples and every generator meets exactly one p-pair and one q-pair.
struct LoopSegment {
  int gen = 0;       // generator index at the start of the segment
  bool p_type = false;  // segment label family
};
struct LoopDecomposition {
  bool loop_type = false;
  std::vector<std::vector<LoopSegment>> loops;  // cyclic words
  std::string str(const PecModule& m) const;
};
LoopDecomposition loop_decompose(const PecModule& m);

// Per-site graded Euler characteristic, emitted in the whole-power
// convention of the alexander module (h read off from A and delta).
std::map<int, GradedPoly> euler_characteristic(const PecModule& m);

// F2 rank of the single-letter components of the differential, keyed by
// (letter, source delta2). Letters are p1..p4, q1..q4.
std::map<std::pair<std::string, int>, int> rank_profile(const PecModule& m);

// Isomorphism of arrow-labelled graphs (exact match of site and all labels
// under some generator bijection; gradings included when graded is set).
bool isomorphic(const PecModule& a, const PecModule& b, bool graded = true);

// --- builders ---

enum class TrivialAxis { Vertical, Horizontal };

// Trivial tangle: two generators b, d (vertical) or a, c (horizontal).
PecModule cftd_trivial(TrivialAxis axis, const std::string& colour = "t");
// One-crossing tangles, multivariate over/under colours.
PecModule cftd_crossing(Sign sign);
// n-twist tangle (n != 0), single colour "t".
PecModule cftd_twist(int n);
// The (2,-3)-pretzel tangle: three loops, 18 generators.
PecModule cftd_pretzel_2m3();
// Loop from a cyclic word of generators with alternating p/q segments.
struct LoopWordEntry {
  int site = 1;
  int delta2 = 0;
  std::map<std::string, int> alex2;
  bool p_to_next = false;  // segment family towards the next entry
};
PecModule loop_from_word(const std::vector<LoopWordEntry>& word, const std::string& stem = "g");

// The skein morphism phi_n between the delta-shifted twist modules, plus its
// shifted source and target; n > 0.
struct SkeinTriple {
  PecModule source;  // the n-twist module, shifted by delta^(-n/2)
  PecModule target;  // the (-n)-twist module, shifted by delta^(n/2)
  PecMorphism phi;
};
SkeinTriple skein_morphism(int n);

// The resolution morphism from the vertical to the horizontal trivial tangle
// whose cone is the one-crossing module.
struct ResolutionData {
  PecModule source;
  PecModule target;
  PecMorphism phi;
};
ResolutionData resolution_morphism();

// The two singular-crossing morphisms (sign = +1 or -1 picks the Alexander
// shift t^{+1} or t^{-1} of the source).
ResolutionData singular_morphism(int sign);
// The expected 4-generator figure-eight modules they reduce to.
PecModule figure_eight_bc();  // sites a, b, b, c
PecModule figure_eight_ad();  // sites a, d, d, c

// Puncture orientations used by the builders.
PunctureOrientation crossing_punctures(Sign sign);
PunctureOrientation twist_punctures();
PunctureOrientation pretzel_punctures();

}  // namespace tfk

#endif
