#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacobipoly/errors.hpp"
#include "jacobipoly/rings.hpp"

namespace jacobipoly {

// Base-p expansion n = sum digits[i] * p^i, least significant digit first.
struct BasePDigits {
  std::uint64_t n = 0;
  std::uint64_t p = 2;
  std::vector<std::uint64_t> digits;

  std::uint64_t digit_sum() const {
    std::uint64_t s = 0;
    for (auto d : digits) s += d;
    return s;
  }
};

inline BasePDigits base_p_digits(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  BasePDigits out{n, p, {}};
  for (std::uint64_t r = n; r > 0; r /= p) out.digits.push_back(r % p);
  return out;
}

// n is a sum of exactly m powers of p.
inline bool in_s_m(std::uint64_t n, std::uint64_t p, std::uint64_t m) {
  if (n == 0) throw std::invalid_argument("in_s_m expects a positive integer");
  return base_p_digits(n, p).digit_sum() == m;
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

// C(a, b) mod p for digits 0 <= a, b < p; zero when a < b.
inline std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = mul_mod(num, a - i, p);
    den = mul_mod(den, i + 1, p);
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

}  // namespace detail

struct LucasFactor {
  std::uint64_t n_digit;
  std::uint64_t m_digit;
  std::uint64_t residue;  // C(n_digit, m_digit) mod p
};

struct LucasBreakdown {
  std::uint64_t residue = 0;
  std::vector<LucasFactor> factors;  // least significant digit first
};

// C(n, m) mod p as the product of digitwise binomials.
inline LucasBreakdown lucas_breakdown(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  LucasBreakdown out;
  out.residue = 1 % p;
  while (n > 0 || m > 0) {
    std::uint64_t a = n % p, b = m % p;
    std::uint64_t f = detail::small_binom_mod(a, b, p);
    out.factors.push_back({a, b, f});
    out.residue = detail::mul_mod(out.residue, f, p);
    n /= p;
    m /= p;
  }
  return out;
}

inline std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  std::uint64_t r = 1 % p;
  while ((n > 0 || m > 0) && r != 0) {
    r = detail::mul_mod(r, detail::small_binom_mod(n % p, m % p, p), p);
    n /= p;
    m /= p;
  }
  return r;
}

// p divides every interior binomial C(n, m), 0 < m < n.
inline bool is_s1_by_divisibility(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n <= 1) throw std::invalid_argument("is_s1_by_divisibility expects n > 1");
  for (std::uint64_t m = 1; m < n; ++m)
    if (binom_mod_p(n, m, p) != 0) return false;
  return true;
}

// For n in s_2(p): the two powers of p summing to n, larger first. A digit 2
// gives n1 == n2.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> s2_decomposition(std::uint64_t n,
                                                                               std::uint64_t p) {
  auto d = base_p_digits(n, p);
  if (d.digit_sum() != 2) return std::nullopt;
  std::vector<std::uint64_t> parts;
  std::uint64_t power = 1;
  for (auto digit : d.digits) {
    for (std::uint64_t k = 0; k < digit; ++k) parts.push_back(power);
    power *= p;
  }
  return std::pair{parts[1], parts[0]};
}

struct Cor2aReport {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  bool interior_divisible = false;  // p | C(n, m) for m outside {n1, n2}
  std::uint64_t edge_residue = 0;   // C(n, n1) mod p
  std::uint64_t edge_residue_n2 = 0;
  std::uint64_t expected_edge = 0;  // (1 + [n1 == n2]) mod p
};

inline Cor2aReport cor2a_check(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  auto parts = s2_decomposition(n, p);
  if (!parts) throw NotInS2(std::to_string(n) + " is not in s_2(" + std::to_string(p) + ")");
  auto [n1, n2] = *parts;
  if (p == 2 && n1 == n2) throw NotInS2("for p = 2 the two parts must be distinct");
  Cor2aReport r{n1, n2, true, binom_mod_p(n, n1, p), binom_mod_p(n, n2, p), (n1 == n2 ? 2u : 1u) % p};
  for (std::uint64_t m = 1; m < n && r.interior_divisible; ++m)
    if (m != n1 && m != n2 && binom_mod_p(n, m, p) != 0) r.interior_divisible = false;
  return r;
}

// The implication "p | C(n,m) C(m,l) for all 0 < l < m < n  =>  n in s_1(p) u s_2(p)".
inline bool cor2b_check(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n <= 1) throw std::invalid_argument("cor2b_check expects n > 1");
  bool hypothesis = true;
  for (std::uint64_t m = 2; m < n && hypothesis; ++m) {
    std::uint64_t outer = binom_mod_p(n, m, p);
    if (outer == 0) continue;
    for (std::uint64_t l = 1; l < m; ++l) {
      if (detail::mul_mod(outer, binom_mod_p(m, l, p), p) != 0) {
        hypothesis = false;
        break;
      }
    }
  }
  if (!hypothesis) return true;
  auto s = base_p_digits(n, p).digit_sum();
  return s == 1 || s == 2;
}

}  // namespace jacobipoly
