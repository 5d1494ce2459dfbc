#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "jacobipoly/classify.hpp"
#include "jacobipoly/errors.hpp"
#include "jacobipoly/jacobi.hpp"
#include "jacobipoly/poly.hpp"
#include "jacobipoly/rings.hpp"

namespace jacobipoly {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// All bivariate polynomials with deg_x, deg_y <= max_deg and coefficients drawn
// from a finite set: every residue of a prime field, or [-bound, bound] for the
// integers (a bounded stand-in for characteristic 0).
//
// Candidates are indexed in mixed radix: one digit per monomial, monomials in
// descending graded-lex order with the constant term least significant, and
// each digit walking the coefficient set in ascending order.
template <CoefficientRing Ring>
class EnumSpace {
 public:
  using Coeff = typename Ring::value_type;

  EnumSpace(Ring ring, std::uint32_t max_deg, std::uint64_t coeff_bound = 1,
            std::uint64_t budget = kDefaultBudget)
      : ring_(std::move(ring)), max_deg_(max_deg), coeff_bound_(coeff_bound), budget_(budget) {
    if constexpr (std::same_as<Ring, PrimeField>) {
      for (std::uint64_t r = 0; r < ring_.modulus(); ++r) universe_.push_back(r);
    } else if constexpr (std::same_as<Ring, IntegerRing>) {
      if (coeff_bound_ == 0) throw Error("coefficient bound must be positive");
      for (long long v = -static_cast<long long>(coeff_bound_); v <= static_cast<long long>(coeff_bound_); ++v)
        universe_.push_back(Coeff(v));
    } else {
      throw UnsupportedSpec("cannot enumerate over " + ring_.name() + ": coefficient set is infinite");
    }
    for (std::uint32_t total = 2 * max_deg_ + 1; total-- > 0;)
      for (std::uint32_t ex = max_deg_ + 1; ex-- > 0;)
        if (ex <= total && total - ex <= max_deg_) monomials_.push_back(Monomial{ex, total - ex});

    count_ = 1;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      if (count_ > budget_ / universe_.size())
        throw BudgetExceeded("enumeration space exceeds budget of " + std::to_string(budget_) +
                             " candidates");
      count_ *= universe_.size();
    }
    if (count_ > budget_)
      throw BudgetExceeded("enumeration space of " + std::to_string(count_) +
                           " candidates exceeds budget of " + std::to_string(budget_));
  }

  const Ring& ring() const { return ring_; }
  std::uint32_t max_deg() const { return max_deg_; }
  std::uint64_t coeff_bound() const { return coeff_bound_; }
  std::uint64_t budget() const { return budget_; }
  std::uint64_t candidate_count() const { return count_; }
  const std::vector<Coeff>& universe() const { return universe_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  MultiPoly<Ring> candidate(std::uint64_t index) const {
    std::vector<typename MultiPoly<Ring>::Term> terms(monomials_.size());
    for (std::size_t k = monomials_.size(); k-- > 0;) {
      terms[k] = {monomials_[k], universe_[index % universe_.size()]};
      index /= universe_.size();
    }
    return MultiPoly<Ring>::from_sorted_terms(ring_, bivariate_vars(), std::move(terms));
  }

  // Inverse of candidate(); nullopt when `p` lies outside the space.
  std::optional<std::uint64_t> index_of(const MultiPoly<Ring>& p) const {
    if (!(p.ring() == ring_) || !(p.vars() == bivariate_vars())) return std::nullopt;
    for (const auto& t : p.terms())
      if (t.monomial[0] > max_deg_ || t.monomial[1] > max_deg_) return std::nullopt;
    std::uint64_t index = 0;
    for (const auto& m : monomials_) {
      auto c = p.coeff(m);
      auto it = std::find(universe_.begin(), universe_.end(), c);
      if (it == universe_.end()) return std::nullopt;
      index = index * universe_.size() + static_cast<std::uint64_t>(it - universe_.begin());
    }
    return index;
  }

 private:
  Ring ring_;
  std::uint32_t max_deg_;
  std::uint64_t coeff_bound_;
  std::uint64_t budget_;
  std::vector<Coeff> universe_;
  std::vector<Monomial> monomials_;
  std::uint64_t count_ = 0;
};

template <CoefficientRing Ring>
struct EnumReport {
  EquationForm form;
  EnumSpace<Ring> space;
  std::vector<MultiPoly<Ring>> solutions;  // candidate-index order
  bool agreement = false;
  long max_deg_x = -1;  // over solutions; -1 when there are none
  long max_deg_y = -1;
};

namespace detail {

template <CoefficientRing Ring>
std::vector<MultiPoly<Ring>> sorted_unique(const EnumSpace<Ring>& space, std::vector<MultiPoly<Ring>> polys) {
  std::vector<std::pair<std::uint64_t, MultiPoly<Ring>>> keyed;
  for (auto& p : polys)
    if (auto i = space.index_of(p)) keyed.emplace_back(*i, std::move(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<MultiPoly<Ring>> out;
  for (auto& [i, p] : keyed) out.push_back(std::move(p));
  return out;
}

template <CoefficientRing Ring>
bool same_polys(const std::vector<MultiPoly<Ring>>& a, const std::vector<MultiPoly<Ring>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace detail

// Every family member lying in `space`, generated from the family parameter
// conditions alone (no defect computation), in candidate-index order.
template <CoefficientRing Ring>
std::vector<MultiPoly<Ring>> family_members(const EnumSpace<Ring>& space) {
  const Ring& r = space.ring();
  const auto& u = space.universe();
  std::vector<MultiPoly<Ring>> out;
  if (r.characteristic() != 3) {
    for (const auto& b : u)
      for (const auto& c : u)
        if (r.is_zero(detail::linear_condition(r, b, c)))
          out.push_back(make_family<Ring>(LinearBC<Ring>{b, c}, r));
  } else {
    for (const auto& a : u)
      for (const auto& b : u)
        for (const auto& d : u)
          if (r.is_zero(detail::product_condition(r, a, b, d)))
            out.push_back(make_family<Ring>(Char3Product<Ring>{a, b, d}, r));
    for (const auto& b : u)
      for (const auto& c : u)
        for (const auto& d : u)
          if (r.is_zero(detail::linear_condition(r, b, c)))
            out.push_back(make_family<Ring>(Char3Affine<Ring>{b, c, d}, r));
  }
  return detail::sorted_unique(space, std::move(out));
}

// What the classification predicts for each form: the families for J1, their
// argument swaps for J2, and only the zero polynomial for J5 and J6.
template <CoefficientRing Ring>
std::vector<MultiPoly<Ring>> predicted_solutions(const EnumSpace<Ring>& space, EquationForm form) {
  switch (form) {
    case EquationForm::J1:
      return family_members(space);
    case EquationForm::J2: {
      std::vector<MultiPoly<Ring>> swapped;
      for (const auto& p : family_members(space)) swapped.push_back(swap(p));
      return detail::sorted_unique(space, std::move(swapped));
    }
    case EquationForm::J5:
    case EquationForm::J6:
      return {MultiPoly<Ring>(space.ring(), bivariate_vars())};
  }
  return {};
}

// Exhaustive scan of `space`, testing every candidate for formal satisfaction
// of `form`. Work is split into contiguous index ranges across `threads`
// workers (0 = hardware concurrency); the merged result is independent of the
// thread count.
template <CoefficientRing Ring>
EnumReport<Ring> enumerate_solutions(const EnumSpace<Ring>& space, EquationForm form,
                                     unsigned threads = 0) {
  const std::uint64_t total = space.candidate_count();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

  std::vector<std::vector<std::uint64_t>> found(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      std::uint64_t lo = total * w / threads, hi = total * (w + 1) / threads;
      for (std::uint64_t i = lo; i < hi; ++i)
        if (satisfies(space.candidate(i), form)) found[w].push_back(i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  EnumReport<Ring> report{form, space, {}, false, -1, -1};
  for (const auto& chunk : found)
    for (auto i : chunk) report.solutions.push_back(space.candidate(i));
  for (const auto& p : report.solutions) {
    report.max_deg_x = std::max(report.max_deg_x, deg_in_var(p, "x"));
    report.max_deg_y = std::max(report.max_deg_y, deg_in_var(p, "y"));
  }

  report.agreement = detail::same_polys(report.solutions, predicted_solutions(space, form));
  if (form == EquationForm::J1)
    for (const auto& p : report.solutions)
      report.agreement = report.agreement && std::holds_alternative<Solution<Ring>>(classify(p));
  return report;
}

// No solution has degree above one in either variable.
template <CoefficientRing Ring>
bool degree_bound_report(const EnumReport<Ring>& report) {
  return report.max_deg_x <= 1 && report.max_deg_y <= 1;
}

// Brute-force J1 solutions of `space` coincide with the family members in it.
template <CoefficientRing Ring>
bool cross_check_families(const EnumSpace<Ring>& space, unsigned threads = 0) {
  return enumerate_solutions(space, EquationForm::J1, threads).agreement;
}

}  // namespace jacobipoly
