#pragma once
// Exact ground fields: the rationals (GMP-backed) and prime fields F_p.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace arideal {

/// Runtime failure raised for malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operations every scalar field must provide. Elements are plain values;
/// the field object carries any state (the modulus for F_p).
template <class F>
concept Field = requires(const F& f, const typename F::value_type& a,
                         const typename F::value_type& b, const mpq_class& q) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, b) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, b) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, b) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_rational(q) } -> std::convertible_to<typename F::value_type>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.name() } -> std::convertible_to<std::string>;
};

/// Q with arbitrary-precision numerators and denominators.
struct Rationals {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error("division by zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type from_rational(const mpq_class& q) const { return q; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }
  bool operator==(const Rationals&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// F_p for a prime p < 2^31, elements stored as canonical residues.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw Error("prime field modulus must be a prime below 2^31, got " + std::to_string(p));
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw Error("division by zero");
    // Fermat: a^(p-2)
    value_type result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  bool is_zero(value_type a) const { return a == 0; }

  value_type from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % static_cast<unsigned long>(p_);
    mpz_class den = q.get_den() % static_cast<unsigned long>(p_);
    if (num < 0) num += static_cast<unsigned long>(p_);
    if (den == 0)
      throw Error("scalar " + q.get_str() + " has a denominator divisible by " + std::to_string(p_));
    return mul(num.get_ui(), inv(den.get_ui()));
  }

  /// Residues above p/2 print as negatives so that -1 reads as -1.
  std::string to_string(value_type a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  std::string name() const { return "prime " + std::to_string(p_); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

static_assert(Field<Rationals>);
static_assert(Field<PrimeField>);

}  // namespace arideal
