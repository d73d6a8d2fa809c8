#ifndef TFK_POLY_HPP
#define TFK_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tfk {

// Exponent record for one term of a graded Laurent polynomial.
// Colour exponents are kept sorted by name; h is the homological variable.
// The delta exponent is stored doubled (d2), so every stored exponent is an
// integer even though delta itself ranges over half-integers.
struct Monomial {
  std::vector<std::pair<std::string, int>> colours;  // sorted, no zero entries
  int h = 0;
  int d2 = 0;

  void set(const std::string& name, int e);
  int get(const std::string& name) const;
  Monomial times(const Monomial& o) const;
  Monomial inverse() const;

  bool operator==(const Monomial& o) const;
  bool operator<(const Monomial& o) const;  // colour-lex, then h, then d2
};

Monomial colour_monomial(const std::string& name, int e);

class GradedPoly {
 public:
  GradedPoly() = default;
  static GradedPoly zero() { return GradedPoly(); }
  static GradedPoly one();
  static GradedPoly term(const Monomial& m, long long c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, long long>& terms() const { return terms_; }

  void add_term(const Monomial& m, long long c);

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly operator-() const;
  bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const GradedPoly& o) const { return !(*this == o); }

  // Sets h = -1 and delta = 1; the sign of each term becomes (-1)^h.
  GradedPoly collapse_h_delta() const;
  // Sets delta = 1 only.
  GradedPoly collapse_delta() const;

  // Substitutes every colour c -> c^-1, h -> h^-1, delta -> delta^-1.
  GradedPoly invert_all_variables() const;

  // Substitutes one colour t -> h^-1 t^-1 in half-power units (the
  // orientation-reversal substitution): a term t^e picks up h^(-e/2),
  // e being the stored doubled exponent, so everything stays integral.
  GradedPoly reverse_colour(const std::string& name) const;

  // Renames a colour; target must not already occur.
  GradedPoly rename_colour(const std::string& from, const std::string& to) const;
  // Identifies colour `from` with colour `to` (exponents add).
  GradedPoly identify_colour(const std::string& from, const std::string& to) const;
  // Sets a colour to +1 or -1 (sign^e with e the stored exponent; since the
  // stored exponents are doubled, -1 means (-1)^(e/2) -- e must be even).
  GradedPoly set_colour_pm_one(const std::string& name, int sign) const;

  // Multiplies every term by m.
  GradedPoly shift(const Monomial& m) const;

  std::vector<std::string> colour_support() const;

  // Leading term in canonical order (requires nonzero).
  std::pair<Monomial, long long> leading() const;

  // Divides by +-(leading monomial) so the result has leading coefficient > 0
  // and leading monomial 1. Zero stays zero.
  GradedPoly unit_normalised() const;

  std::string str() const;

 private:
  std::map<Monomial, long long> terms_;
};

// True iff a = +- m * b for a single monomial m.
bool equal_up_to_unit(const GradedPoly& a, const GradedPoly& b);

std::string monomial_str(const Monomial& m);

}  // namespace tfk

#endif
