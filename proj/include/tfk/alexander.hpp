#ifndef TFK_ALEXANDER_HPP
#define TFK_ALEXANDER_HPP

#include <map>
#include <string>
#include <vector>

#include "tfk/diagram.hpp"
#include "tfk/poly.hpp"
#include "tfk/states.hpp"

namespace tfk {

// Alexander code of one quadrant in the whole-power convention: colour
// exponents are twice the classical half-power ones, and delta is carried
// as a doubled exponent.
GradedPoly label_of(const TangleDiagram& d, int crossing, int quadrant);

// Product of the marker labels of a state.
GradedPoly state_label(const TangleDiagram& d, const KauffmanState& x);

// Per-site sum of state labels (the graded polynomial with h and delta).
std::map<Site, GradedPoly> nabla_hat(const TangleDiagram& d);

// nabla_hat with h = -1, delta = 1. In classical variables this computes
// N(x) = nabla(x^2): substitute each colour by its square root to recover
// the usual half-power normalisation.
GradedPoly nabla(const TangleDiagram& d, const Site& s);
std::map<Site, GradedPoly> nabla_all(const TangleDiagram& d);

struct GeneratorRow {
  Site site;
  std::string word;  // g(x): occupied region labels in crossing order
  GradedPoly monomial;
};

// One row per Kauffman state; summing monomials per site gives nabla_hat.
std::vector<GeneratorRow> generator_table(const TangleDiagram& d);
std::string generator_table_tsv(const TangleDiagram& d);

// Twice the linking number of two distinct colours.
int linking_number2(const TangleDiagram& d, const std::string& c1, const std::string& c2);
// Twice lk(t) = sum of lk(t, s) over the other colours s.
int total_linking_number2(const TangleDiagram& d, const std::string& t);

// Determinant of the regions-by-crossings presentation matrix with the rows
// of the unoccupied open regions removed. Agrees with nabla(d, s) up to a
// sign and a single monomial. Throws if the matrix is not square (which
// signals a non-disc face) or the site has the wrong size.
GradedPoly nabla_via_determinant(const TangleDiagram& d, const Site& s);

// Text grid of a polynomial in at most two colours: rows indexed by the
// exponent of c1, columns by the exponent of c2, origin marked with [...].
std::string render_grid(const GradedPoly& p, const std::string& c1, const std::string& c2);

}  // namespace tfk

#endif
