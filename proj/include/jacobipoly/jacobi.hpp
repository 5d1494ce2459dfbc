#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "jacobipoly/errors.hpp"
#include "jacobipoly/poly.hpp"

namespace jacobipoly {

// The four functional equations, written with [a,b] = P(a,b):
//   J1  P(P(x,y),z) + P(P(y,z),x) + P(P(z,x),y)
//   J2  P(x,P(y,z)) + P(y,P(z,x)) + P(z,P(x,y))
//   J5  P(P(x,y),z) + P(y,P(x,z)) - P(x,P(y,z))
//   J6  P(x,P(y,z)) + P(P(x,z),y) - P(P(x,y),z)
enum class EquationForm { J1, J2, J5, J6 };

inline constexpr std::array kAllForms{EquationForm::J1, EquationForm::J2, EquationForm::J5,
                                      EquationForm::J6};

inline std::string to_string(EquationForm f) {
  switch (f) {
    case EquationForm::J1: return "j1";
    case EquationForm::J2: return "j2";
    case EquationForm::J5: return "j5";
    case EquationForm::J6: return "j6";
  }
  return "?";
}

inline EquationForm parse_form(std::string_view s) {
  for (auto f : kAllForms)
    if (to_string(f) == s) return f;
  throw Error("unknown equation form '" + std::string(s) + "' (expected j1, j2, j5 or j6)");
}

inline const VarList& bivariate_vars() {
  static const VarList vars{"x", "y"};
  return vars;
}

inline const VarList& trivariate_vars() {
  static const VarList vars{"x", "y", "z"};
  return vars;
}

template <CoefficientRing Ring>
void require_bivariate(const MultiPoly<Ring>& p) {
  if (!(p.vars() == bivariate_vars()))
    throw WrongArity("expected a polynomial in (x,y), got one in " + p.vars().to_string());
}

// P'(x,y) = P(y,x).
template <CoefficientRing Ring>
MultiPoly<Ring> swap(const MultiPoly<Ring>& p) {
  require_bivariate(p);
  std::vector<typename MultiPoly<Ring>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({Monomial{t.monomial[1], t.monomial[0]}, t.coeff});
  return MultiPoly<Ring>::from_terms(p.ring(), p.vars(), std::move(terms));
}

namespace detail {

template <CoefficientRing Ring>
class Composer {
 public:
  using Poly = MultiPoly<Ring>;

  explicit Composer(const Poly& p)
      : p_(p),
        x_(Poly::variable(p.ring(), trivariate_vars(), "x")),
        y_(Poly::variable(p.ring(), trivariate_vars(), "y")),
        z_(Poly::variable(p.ring(), trivariate_vars(), "z")) {}

  // P(a, b) for trivariate a, b.
  Poly operator()(const Poly& a, const Poly& b) const {
    const std::array<Poly, 2> args{a, b};
    return substitute_positional<Ring>(p_, args);
  }

  const Poly& x() const { return x_; }
  const Poly& y() const { return y_; }
  const Poly& z() const { return z_; }

 private:
  const Poly& p_;
  Poly x_, y_, z_;
};

}  // namespace detail

// The defect polynomial of `form` in (x,y,z); P solves the equation exactly
// when this is the zero polynomial.
template <CoefficientRing Ring>
MultiPoly<Ring> defect(const MultiPoly<Ring>& p, EquationForm form) {
  require_bivariate(p);
  detail::Composer<Ring> P(p);
  const auto &x = P.x(), &y = P.y(), &z = P.z();
  switch (form) {
    case EquationForm::J1:
      return P(P(x, y), z) + P(P(y, z), x) + P(P(z, x), y);
    case EquationForm::J2:
      return P(x, P(y, z)) + P(y, P(z, x)) + P(z, P(x, y));
    case EquationForm::J5:
      return P(P(x, y), z) + P(y, P(x, z)) - P(x, P(y, z));
    case EquationForm::J6:
      return P(x, P(y, z)) + P(P(x, z), y) - P(P(x, y), z);
  }
  throw Error("unknown equation form");
}

// Formal identity: the defect is the zero element of R[x,y,z].
template <CoefficientRing Ring>
bool satisfies(const MultiPoly<Ring>& p, EquationForm form) {
  return defect(p, form).is_zero();
}

// Smallest nonzero term of a defect in graded-lex order, if any.
template <CoefficientRing Ring>
std::optional<typename MultiPoly<Ring>::Term> witness_term(const MultiPoly<Ring>& defect_poly) {
  if (defect_poly.is_zero()) return std::nullopt;
  return defect_poly.terms().back();
}

}  // namespace jacobipoly
