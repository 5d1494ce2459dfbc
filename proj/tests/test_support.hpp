#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jacobipoly/jacobipoly.hpp"

namespace jacobipoly::testing {

// Uniform random ring elements; integers span a few machine words so that
// carries in the big-integer backend get exercised.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  long long between(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }

  Integer element(const IntegerRing&) {
    Integer v = between(-1'000'000'007LL, 1'000'000'007LL);
    if (below(4) == 0) v = v * v * v;
    return v;
  }
  std::uint64_t element(const PrimeField& f) { return below(f.modulus()); }
  std::vector<std::uint64_t> element(const UnivariateExtension& e) {
    std::vector<std::uint64_t> c(below(5));
    for (auto& v : c) v = below(e.base().modulus());
    return e.from_residues(std::move(c));
  }

  template <CoefficientRing Ring>
  typename Ring::value_type nonzero(const Ring& r) {
    for (;;) {
      auto v = element(r);
      if (!r.is_zero(v)) return v;
    }
  }

  // Small coefficients keep products readable; at most `terms` terms of
  // degree <= max_deg in each variable.
  template <CoefficientRing Ring>
  MultiPoly<Ring> poly(const Ring& r, const VarList& vars, std::uint32_t max_deg, std::size_t terms) {
    std::vector<typename MultiPoly<Ring>::Term> ts;
    std::size_t n = below(terms + 1);
    for (std::size_t k = 0; k < n; ++k) {
      Monomial m(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) m.set(i, static_cast<std::uint32_t>(below(max_deg + 1)));
      ts.push_back({m, small(r)});
    }
    return MultiPoly<Ring>::from_terms(r, vars, std::move(ts));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  template <CoefficientRing Ring>
  typename Ring::value_type small(const Ring& r) {
    if constexpr (std::same_as<Ring, IntegerRing>)
      return Integer(between(-9, 9));
    else
      return element(r);
  }

  std::mt19937_64 rng_;
};

}  // namespace jacobipoly::testing
