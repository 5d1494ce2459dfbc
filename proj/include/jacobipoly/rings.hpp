#pragma once

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jacobipoly/errors.hpp"

namespace jacobipoly {

using Integer = boost::multiprecision::cpp_int;

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Deterministic trial division; moduli are expected to be small.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(p);
}

// A coefficient domain: a small value object describing the ring, with the
// arithmetic spelled out as member functions over plain `value_type`s.
// Polynomials store one ring and raw values, so the hot loops never carry a
// per-coefficient ring descriptor.
template <class R>
concept CoefficientRing =
    std::equality_comparable<R> &&
    requires(const R& r, const typename R::value_type& a, const Integer& n) {
      { r.zero() } -> std::same_as<typename R::value_type>;
      { r.one() } -> std::same_as<typename R::value_type>;
      { r.from_integer(n) } -> std::same_as<typename R::value_type>;
      { r.add(a, a) } -> std::same_as<typename R::value_type>;
      { r.sub(a, a) } -> std::same_as<typename R::value_type>;
      { r.neg(a) } -> std::same_as<typename R::value_type>;
      { r.mul(a, a) } -> std::same_as<typename R::value_type>;
      { r.is_zero(a) } -> std::same_as<bool>;
      { r.is_one(a) } -> std::same_as<bool>;
      { r.is_negative(a) } -> std::same_as<bool>;
      { r.characteristic() } -> std::same_as<std::uint64_t>;
      { r.to_string(a) } -> std::same_as<std::string>;
      { r.name() } -> std::same_as<std::string>;
    };

// The integers, arbitrary precision.
class IntegerRing {
 public:
  using value_type = Integer;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const Integer& n) const { return n; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_one(const value_type& a) const { return a == 1; }
  bool is_negative(const value_type& a) const { return a.sign() < 0; }
  std::uint64_t characteristic() const { return 0; }
  std::string to_string(const value_type& a) const { return a.str(); }
  std::string name() const { return "int"; }

  bool operator==(const IntegerRing&) const = default;
};

// Z/pZ with canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    require_prime(p);
    if (p >= (std::uint64_t{1} << 32)) throw Error("modulus must be below 2^32");
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const Integer& n) const {
    Integer r = n % p_;
    if (r.sign() < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool is_negative(value_type) const { return false; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "zp:" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

// F_p[t]: dense residue lists, lowest degree first, no trailing zero.
class UnivariateExtension {
 public:
  using value_type = std::vector<std::uint64_t>;

  UnivariateExtension(PrimeField base, std::string var) : base_(base), var_(std::move(var)) {
    if (!is_identifier(var_)) throw Error("invalid extension variable name '" + var_ + "'");
  }

  const PrimeField& base() const { return base_; }
  const std::string& variable_name() const { return var_; }

  // The extension variable t itself.
  value_type generator() const { return {0, 1}; }

  value_type zero() const { return {}; }
  value_type one() const { return {1}; }
  value_type from_integer(const Integer& n) const { return trimmed({base_.from_integer(n)}); }
  value_type from_residues(value_type coeffs) const {
    for (auto& c : coeffs) c %= base_.modulus();
    return trimmed(std::move(coeffs));
  }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = base_.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return trimmed(std::move(r));
  }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type neg(const value_type& a) const {
    value_type r(a.size());
    std::transform(a.begin(), a.end(), r.begin(), [this](auto c) { return base_.neg(c); });
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.empty() || b.empty()) return {};
    value_type r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
    return trimmed(std::move(r));
  }
  bool is_zero(const value_type& a) const { return a.empty(); }
  bool is_one(const value_type& a) const { return a.size() == 1 && a[0] == 1; }
  bool is_negative(const value_type&) const { return false; }
  std::uint64_t characteristic() const { return base_.characteristic(); }

  // Constants print bare; anything involving the variable is parenthesized,
  // ascending powers, e.g. "(1+2*t^2)".
  std::string to_string(const value_type& a) const {
    if (a.empty()) return "0";
    if (a.size() == 1) return std::to_string(a[0]);
    std::string out = "(";
    bool first = true;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      if (!first) out += '+';
      first = false;
      if (k == 0) {
        out += std::to_string(a[k]);
        continue;
      }
      if (a[k] != 1) out += std::to_string(a[k]) + "*";
      out += var_;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out + ")";
  }
  std::string name() const { return base_.name() + "[" + var_ + "]"; }

  bool operator==(const UnivariateExtension&) const = default;

 private:
  static value_type trimmed(value_type v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }

  PrimeField base_;
  std::string var_;
};

static_assert(CoefficientRing<IntegerRing>);
static_assert(CoefficientRing<PrimeField>);
static_assert(CoefficientRing<UnivariateExtension>);

template <CoefficientRing Ring>
typename Ring::value_type ring_pow(const Ring& ring, typename Ring::value_type base, std::uint64_t n) {
  auto result = ring.one();
  while (n > 0) {
    if (n & 1) result = ring.mul(result, base);
    n >>= 1;
    if (n > 0) base = ring.mul(base, base);
  }
  return result;
}

// A ring value bundled with its ring. Mixing rings throws SpecMismatch.
template <CoefficientRing Ring>
class RingElement {
 public:
  using value_type = typename Ring::value_type;

  RingElement(Ring ring, value_type value) : ring_(std::move(ring)), value_(std::move(value)) {}
  static RingElement from_integer(const Ring& ring, const Integer& n) {
    return RingElement(ring, ring.from_integer(n));
  }

  const Ring& ring() const { return ring_; }
  const value_type& value() const { return value_; }
  bool is_zero() const { return ring_.is_zero(value_); }
  std::string to_string() const { return ring_.to_string(value_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    a.check(b);
    return RingElement(a.ring_, a.ring_.add(a.value_, b.value_));
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    a.check(b);
    return RingElement(a.ring_, a.ring_.sub(a.value_, b.value_));
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check(b);
    return RingElement(a.ring_, a.ring_.mul(a.value_, b.value_));
  }
  RingElement operator-() const { return RingElement(ring_, ring_.neg(value_)); }
  RingElement pow(std::uint64_t n) const { return RingElement(ring_, ring_pow(ring_, value_, n)); }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    a.check(b);
    return a.value_ == b.value_;
  }

 private:
  void check(const RingElement& other) const {
    if (!(ring_ == other.ring_)) throw SpecMismatch(ring_.name(), other.ring_.name());
  }

  Ring ring_;
  value_type value_;
};

template <CoefficientRing Ring>
std::uint64_t characteristic(const Ring& ring) {
  return ring.characteristic();
}

// Runtime choice of coefficient domain, as named on the command line.
using RingSpec = std::variant<IntegerRing, PrimeField, UnivariateExtension>;

inline std::uint64_t characteristic(const RingSpec& spec) {
  return std::visit([](const auto& r) { return r.characteristic(); }, spec);
}

inline std::string ring_spec_string(const RingSpec& spec) {
  return std::visit([](const auto& r) { return r.name(); }, spec);
}

// `int` | `zp:<p>` | `zp:<p>[<var>]`
inline RingSpec parse_ring_spec(std::string_view text) {
  if (text == "int") return IntegerRing{};
  if (!text.starts_with("zp:")) throw Error("unrecognized ring spec '" + std::string(text) + "'");
  std::string_view rest = text.substr(3);
  std::size_t digits = 0;
  while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits]))) ++digits;
  if (digits == 0 || digits > 10) throw Error("bad modulus in ring spec '" + std::string(text) + "'");
  PrimeField field(std::stoull(std::string(rest.substr(0, digits))));
  rest = rest.substr(digits);
  if (rest.empty()) return field;
  if (rest.size() < 3 || rest.front() != '[' || rest.back() != ']')
    throw Error("bad extension syntax in ring spec '" + std::string(text) + "'");
  return UnivariateExtension(field, std::string(rest.substr(1, rest.size() - 2)));
}

}  // namespace jacobipoly
