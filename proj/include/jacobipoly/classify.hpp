#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jacobipoly/errors.hpp"
#include "jacobipoly/jacobi.hpp"
#include "jacobipoly/poly.hpp"
#include "jacobipoly/rings.hpp"

namespace jacobipoly {

// Bx + Cy with B^2 + BC + C = 0 (any characteristic).
template <CoefficientRing Ring>
struct LinearBC {
  typename Ring::value_type b, c;
};

// Axy + B(x + y) + D with AD = B^2 - B (characteristic 3).
template <CoefficientRing Ring>
struct Char3Product {
  typename Ring::value_type a, b, d;
};

// Bx + Cy + D with B^2 + BC + C = 0 (characteristic 3).
template <CoefficientRing Ring>
struct Char3Affine {
  typename Ring::value_type b, c, d;
};

template <CoefficientRing Ring>
using FamilyParams = std::variant<LinearBC<Ring>, Char3Product<Ring>, Char3Affine<Ring>>;

template <CoefficientRing Ring>
std::string family_name(const FamilyParams<Ring>& params) {
  struct Visitor {
    std::string operator()(const LinearBC<Ring>&) const { return "LinearBC"; }
    std::string operator()(const Char3Product<Ring>&) const { return "Char3Product"; }
    std::string operator()(const Char3Affine<Ring>&) const { return "Char3Affine"; }
  };
  return std::visit(Visitor{}, params);
}

// Named parameter values in a stable order, e.g. {{"B","-2"},{"C","4"}}.
template <CoefficientRing Ring>
std::vector<std::pair<std::string, std::string>> family_param_strings(const Ring& ring,
                                                                      const FamilyParams<Ring>& params) {
  struct Visitor {
    const Ring& r;
    std::vector<std::pair<std::string, std::string>> operator()(const LinearBC<Ring>& f) const {
      return {{"B", r.to_string(f.b)}, {"C", r.to_string(f.c)}};
    }
    std::vector<std::pair<std::string, std::string>> operator()(const Char3Product<Ring>& f) const {
      return {{"A", r.to_string(f.a)}, {"B", r.to_string(f.b)}, {"D", r.to_string(f.d)}};
    }
    std::vector<std::pair<std::string, std::string>> operator()(const Char3Affine<Ring>& f) const {
      return {{"B", r.to_string(f.b)}, {"C", r.to_string(f.c)}, {"D", r.to_string(f.d)}};
    }
  };
  return std::visit(Visitor{ring}, params);
}

namespace detail {

template <CoefficientRing Ring>
typename Ring::value_type linear_condition(const Ring& r, const typename Ring::value_type& b,
                                           const typename Ring::value_type& c) {
  // B^2 + BC + C
  return r.add(r.add(r.mul(b, b), r.mul(b, c)), c);
}

template <CoefficientRing Ring>
typename Ring::value_type product_condition(const Ring& r, const typename Ring::value_type& a,
                                            const typename Ring::value_type& b,
                                            const typename Ring::value_type& d) {
  // AD - (B^2 - B)
  return r.sub(r.mul(a, d), r.sub(r.mul(b, b), b));
}

template <CoefficientRing Ring>
typename Ring::value_type times3(const Ring& r, const typename Ring::value_type& v) {
  return r.add(r.add(v, v), v);
}

}  // namespace detail

// Throws CharMismatch or ConditionViolated when the parameters do not describe
// a member of their family over `ring`.
template <CoefficientRing Ring>
void validate_family(const FamilyParams<Ring>& params, const Ring& ring) {
  auto require_char3 = [&](const char* family) {
    if (ring.characteristic() != 3)
      throw CharMismatch(std::string(family) + " requires characteristic 3, " + ring.name() +
                         " has characteristic " + std::to_string(ring.characteristic()));
  };
  auto require_linear = [&](const auto& b, const auto& c) {
    auto v = detail::linear_condition(ring, b, c);
    if (!ring.is_zero(v))
      throw ConditionViolated("B^2+BC+C = " + ring.to_string(v) + " is not zero");
  };
  if (auto* f = std::get_if<LinearBC<Ring>>(&params)) {
    require_linear(f->b, f->c);
  } else if (auto* f = std::get_if<Char3Product<Ring>>(&params)) {
    require_char3("Char3Product");
    auto v = detail::product_condition(ring, f->a, f->b, f->d);
    if (!ring.is_zero(v))
      throw ConditionViolated("AD-(B^2-B) = " + ring.to_string(v) + " is not zero");
  } else if (auto* f = std::get_if<Char3Affine<Ring>>(&params)) {
    require_char3("Char3Affine");
    require_linear(f->b, f->c);
  }
}

// The family polynomial in (x,y) after validating the parameters.
template <CoefficientRing Ring>
MultiPoly<Ring> make_family(const FamilyParams<Ring>& params, const Ring& ring) {
  validate_family(params, ring);
  using Poly = MultiPoly<Ring>;
  const auto& vars = bivariate_vars();
  std::vector<typename Poly::Term> terms;
  auto add = [&](std::uint32_t ex, std::uint32_t ey, const typename Ring::value_type& c) {
    terms.push_back({Monomial{ex, ey}, c});
  };
  if (auto* f = std::get_if<LinearBC<Ring>>(&params)) {
    add(1, 0, f->b);
    add(0, 1, f->c);
  } else if (auto* f = std::get_if<Char3Product<Ring>>(&params)) {
    add(1, 1, f->a);
    add(1, 0, f->b);
    add(0, 1, f->b);
    add(0, 0, f->d);
  } else if (auto* f = std::get_if<Char3Affine<Ring>>(&params)) {
    add(1, 0, f->b);
    add(0, 1, f->c);
    add(0, 0, f->d);
  }
  return Poly::from_terms(ring, vars, std::move(terms));
}

// Axy + Bx + Cy + D solves J1 exactly when all four residuals vanish.
template <CoefficientRing Ring>
struct SystemResiduals {
  typename Ring::value_type three_a_squared;        // 3A^2
  typename Ring::value_type three_d_b_plus_one;     // 3D(B+1)
  typename Ring::value_type a_two_b_plus_c;         // A(2B+C)
  typename Ring::value_type b2_bc_c_ad;             // B^2+BC+C+AD

  bool all_zero(const Ring& r) const {
    return r.is_zero(three_a_squared) && r.is_zero(three_d_b_plus_one) &&
           r.is_zero(a_two_b_plus_c) && r.is_zero(b2_bc_c_ad);
  }
};

template <CoefficientRing Ring>
SystemResiduals<Ring> system_check(const Ring& r, const typename Ring::value_type& a,
                                   const typename Ring::value_type& b,
                                   const typename Ring::value_type& c,
                                   const typename Ring::value_type& d) {
  using detail::times3;
  return {
      times3(r, r.mul(a, a)),
      times3(r, r.mul(d, r.add(b, r.one()))),
      r.mul(a, r.add(r.add(b, b), c)),
      r.add(detail::linear_condition(r, b, c), r.mul(a, d)),
  };
}

template <CoefficientRing Ring>
SystemResiduals<Ring> system_check(const RingElement<Ring>& a, const RingElement<Ring>& b,
                                   const RingElement<Ring>& c, const RingElement<Ring>& d) {
  for (const auto* e : {&b, &c, &d})
    if (!(e->ring() == a.ring())) throw SpecMismatch(a.ring().name(), e->ring().name());
  return system_check(a.ring(), a.value(), b.value(), c.value(), d.value());
}

template <CoefficientRing Ring>
struct Solution {
  FamilyParams<Ring> family;
};

template <CoefficientRing Ring>
struct NotJacobi {
  Monomial witness_monomial;  // over (x,y,z)
  typename Ring::value_type witness_coeff;
};

template <CoefficientRing Ring>
using ClassificationResult = std::variant<Solution<Ring>, NotJacobi<Ring>>;

// Decides whether P solves J1 and, if so, which family it belongs to. On
// overlap in characteristic 3 (A = 0 and C = B with B^2 = B) the affine family
// is reported. Refutations always carry the graded-lex-least defect term.
template <CoefficientRing Ring>
ClassificationResult<Ring> classify(const MultiPoly<Ring>& p) {
  require_bivariate(p);
  const Ring& r = p.ring();
  if (deg_in_var(p, "x") <= 1 && deg_in_var(p, "y") <= 1) {
    auto a = p.coeff(Monomial{1, 1});
    auto b = p.coeff(Monomial{1, 0});
    auto c = p.coeff(Monomial{0, 1});
    auto d = p.coeff(Monomial{0, 0});
    if (system_check(r, a, b, c, d).all_zero(r)) {
      if (r.characteristic() != 3) return Solution<Ring>{LinearBC<Ring>{b, c}};
      if (!r.is_zero(a)) return Solution<Ring>{Char3Product<Ring>{a, b, d}};
      return Solution<Ring>{Char3Affine<Ring>{b, c, d}};
    }
  }
  auto w = witness_term(defect(p, EquationForm::J1));
  if (!w) throw std::logic_error("J1 defect vanished for " + to_string(p) + " outside every family");
  return NotJacobi<Ring>{w->monomial, w->coeff};
}

struct ConstantSolutions {
  bool nonzero_constants = false;
  std::string description;
};

// Constant P = C solves J1 iff 3C = 0.
inline ConstantSolutions constant_solutions(std::uint64_t characteristic) {
  if (characteristic == 3) return {true, "every constant C solves J1 (3C = 0 holds identically)"};
  return {false, "only the constant 0 solves J1 (3C = 0 forces C = 0)"};
}

template <CoefficientRing Ring>
ConstantSolutions constant_solutions(const Ring& ring) {
  return constant_solutions(ring.characteristic());
}

struct FamilyDescription {
  std::string name;
  std::string shape;
  std::string condition;
};

// Solution families applicable in the given characteristic.
inline std::vector<FamilyDescription> families_for_characteristic(std::uint64_t characteristic) {
  if (characteristic != 3) return {{"LinearBC", "B*x+C*y", "B^2+B*C+C=0"}};
  return {{"Char3Product", "A*x*y+B*(x+y)+D", "A*D=B^2-B"},
          {"Char3Affine", "B*x+C*y+D", "B^2+B*C+C=0"}};
}

}  // namespace jacobipoly
