#pragma once

// Exact scalars over Q (GMP rationals) or a prime field GF(p).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "skewgin/error.hpp"

namespace skewgin {

class Scalar;

class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws NonPrimeModulus unless p is prime.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rationals() const noexcept { return kind_ == Kind::rationals; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Accepts "n", "-n", "n/m". Over GF(p) the fraction is reduced mod p.
  Scalar parse(std::string_view text) const;

  /// True when n is invertible in the field, i.e. char does not divide n.
  bool is_unit(std::uint64_t n) const noexcept { return p_ == 0 || n % p_ != 0; }

  std::string describe() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// A field element in canonical form: reduced fraction, or residue in [0, p).
/// Arithmetic between elements of different fields throws FieldMismatch.
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    bool operator==(const Residue&) const = default;
  };

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  Scalar(std::uint64_t residue, std::uint64_t modulus) : value_(Residue{residue % modulus, modulus}) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws InvalidArgument on zero.
  Scalar inverse() const;
  /// Negative exponents invert.
  Scalar pow(long long e) const;

  bool operator==(const Scalar& rhs) const;

  std::string to_string() const;

  const std::variant<mpq_class, Residue>& raw() const noexcept { return value_; }

 private:
  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Least-value primitive n-th root of unity in the field (deterministic).
/// Throws NoRootOfUnity when none exists.
Scalar primitive_root_of_unity(const Field& field, std::uint64_t n);

/// Multiplicative order of a nonzero scalar, or 0 when infinite (Q, |x| != 1).
std::uint64_t multiplicative_order(const Scalar& x);

}  // namespace skewgin
