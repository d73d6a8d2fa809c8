#include "tfk/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tfk {

void Monomial::set(const std::string& name, int e) {
  auto it = std::lower_bound(colours.begin(), colours.end(), name,
                             [](const auto& p, const std::string& n) { return p.first < n; });
  if (it != colours.end() && it->first == name) {
    if (e == 0)
      colours.erase(it);
    else
      it->second = e;
  } else if (e != 0) {
    colours.insert(it, {name, e});
  }
}

int Monomial::get(const std::string& name) const {
  for (const auto& [n, e] : colours)
    if (n == name) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.h = h + o.h;
  r.d2 = d2 + o.d2;
  std::size_t i = 0, j = 0;
  while (i < colours.size() || j < o.colours.size()) {
    if (j == o.colours.size() || (i < colours.size() && colours[i].first < o.colours[j].first)) {
      r.colours.push_back(colours[i++]);
    } else if (i == colours.size() || o.colours[j].first < colours[i].first) {
      r.colours.push_back(o.colours[j++]);
    } else {
      int e = colours[i].second + o.colours[j].second;
      if (e != 0) r.colours.push_back({colours[i].first, e});
      ++i, ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  r.h = -h;
  r.d2 = -d2;
  for (auto& [n, e] : r.colours) e = -e;
  return r;
}

bool Monomial::operator==(const Monomial& o) const {
  return h == o.h && d2 == o.d2 && colours == o.colours;
}

bool Monomial::operator<(const Monomial& o) const {
  // Lexicographic over the union of colour names, missing exponents read as 0.
  std::size_t i = 0, j = 0;
  while (i < colours.size() || j < o.colours.size()) {
    int ea = 0, eb = 0;
    const std::string* name = nullptr;
    if (j == o.colours.size() || (i < colours.size() && colours[i].first < o.colours[j].first)) {
      name = &colours[i].first;
      ea = colours[i].second;
      ++i;
    } else if (i == colours.size() || o.colours[j].first < colours[i].first) {
      name = &o.colours[j].first;
      eb = o.colours[j].second;
      ++j;
    } else {
      name = &colours[i].first;
      ea = colours[i].second;
      eb = o.colours[j].second;
      ++i, ++j;
    }
    (void)name;
    if (ea != eb) return ea < eb;
  }
  if (h != o.h) return h < o.h;
  return d2 < o.d2;
}

Monomial colour_monomial(const std::string& name, int e) {
  Monomial m;
  m.set(name, e);
  return m;
}

GradedPoly GradedPoly::one() { return term(Monomial{}); }

GradedPoly GradedPoly::term(const Monomial& m, long long c) {
  GradedPoly p;
  p.add_term(m, c);
  return p;
}

void GradedPoly::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  GradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
  GradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  GradedPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
  return r;
}

GradedPoly GradedPoly::collapse_h_delta() const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    long long sign = (n.h % 2 == 0) ? 1 : -1;
    n.h = 0;
    n.d2 = 0;
    r.add_term(n, sign * c);
  }
  return r;
}

GradedPoly GradedPoly::collapse_delta() const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.d2 = 0;
    r.add_term(n, c);
  }
  return r;
}

GradedPoly GradedPoly::invert_all_variables() const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m.inverse(), c);
  return r;
}

GradedPoly GradedPoly::reverse_colour(const std::string& name) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    int e = n.get(name);
    if (e % 2 != 0) throw std::runtime_error("reverse_colour: odd doubled exponent");
    n.set(name, -e);
    n.h -= e / 2;  // t -> h^-1 t^-1 in half-power units; e is the doubled exponent
    r.add_term(n, c);
  }
  return r;
}

GradedPoly GradedPoly::rename_colour(const std::string& from, const std::string& to) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    int e = n.get(from);
    if (e != 0 && n.get(to) != 0) throw std::runtime_error("rename_colour: target in use");
    n.set(from, 0);
    n.set(to, e);
    r.add_term(n, c);
  }
  return r;
}

GradedPoly GradedPoly::identify_colour(const std::string& from, const std::string& to) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    int e = n.get(from);
    n.set(from, 0);
    n.set(to, n.get(to) + e);
    r.add_term(n, c);
  }
  return r;
}

GradedPoly GradedPoly::set_colour_pm_one(const std::string& name, int sign) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    int e = n.get(name);
    n.set(name, 0);
    long long s = 1;
    if (sign < 0) {
      if (e % 2 != 0) throw std::runtime_error("set_colour_pm_one: odd doubled exponent");
      if ((e / 2) % 2 != 0) s = -1;
    }
    r.add_term(n, s * c);
  }
  return r;
}

GradedPoly GradedPoly::shift(const Monomial& m) const {
  GradedPoly r;
  for (const auto& [m1, c] : terms_) r.add_term(m1.times(m), c);
  return r;
}

std::vector<std::string> GradedPoly::colour_support() const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, e] : m.colours)
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Monomial, long long> GradedPoly::leading() const {
  if (terms_.empty()) throw std::runtime_error("leading: zero polynomial");
  return *terms_.rbegin();
}

GradedPoly GradedPoly::unit_normalised() const {
  if (is_zero()) return *this;
  auto [m, c] = leading();
  GradedPoly r;
  for (const auto& [m1, c1] : terms_) r.add_term(m1.times(m.inverse()), c < 0 ? -c1 : c1);
  return r;
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << "*";
    first = false;
  };
  for (const auto& [n, e] : m.colours) {
    sep();
    os << n;
    if (e != 1) os << "^" << e;
  }
  if (m.h != 0) {
    sep();
    os << "h";
    if (m.h != 1) os << "^" << m.h;
  }
  if (m.d2 != 0) {
    sep();
    os << "δ^";
    if (m.d2 % 2 == 0)
      os << m.d2 / 2;
    else
      os << m.d2 << "/2";
  }
  if (first) os << "1";
  return os.str();
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long a = c;
    if (first) {
      if (a < 0) {
        os << "- ";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << a << " ";
    os << monomial_str(m);
  }
  return os.str();
}

bool equal_up_to_unit(const GradedPoly& a, const GradedPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.unit_normalised() == b.unit_normalised();
}

}  // namespace tfk
