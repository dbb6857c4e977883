#include "skewgin/scalar.hpp"

#include <numeric>
#include <ostream>
#include <vector>

namespace skewgin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::NoRootOfUnity: return "NoRootOfUnity";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::QuiverMismatch: return "QuiverMismatch";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotLengthHomogeneous: return "NotLengthHomogeneous";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::NotInvariantPotential: return "NotInvariantPotential";
    case ErrorCode::EquivarianceFailure: return "EquivarianceFailure";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::IncompleteIdempotents: return "IncompleteIdempotents";
    case ErrorCode::BasisExpressFailure: return "BasisExpressFailure";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

[[noreturn]] void mismatch() { throw Error(ErrorCode::FieldMismatch, "scalars live in different fields"); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (p > (1ULL << 62)) throw Error(ErrorCode::InvalidArgument, "modulus too large");
  return Field(Kind::prime, p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (kind_ == Kind::rationals) return Scalar(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Scalar(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::rationals) return Scalar(q);
  std::uint64_t num = reduce(q.get_num(), p_);
  std::uint64_t den = reduce(q.get_den(), p_);
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "denominator divisible by the characteristic");
  return Scalar(num, p_) / Scalar(den, p_);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num, den(1);
    auto valid = [](const std::string& part) {
      if (part.empty()) return false;
      std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (start == part.size()) return false;
      for (std::size_t i = start; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') return false;
      }
      return true;
    };
    std::string num_text = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num_text.empty() && num_text[0] == '+') num_text.erase(0, 1);
    if (!valid(num_text) || !valid(den_text) || den_text[0] == '-') throw std::invalid_argument("bad scalar");
    num.set_str(num_text, 10);
    den.set_str(den_text, 10);
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + s + "'");
    return from_rational(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "cannot parse scalar '" + s + "'");
  }
}

std::string Field::describe() const {
  if (kind_ == Kind::rationals) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(Field::Kind::prime, r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* o = std::get_if<Residue>(&rhs.value_);
    if (!o || o->modulus != r->modulus) mismatch();
    std::uint64_t sum = r->value + o->value;
    if (sum >= r->modulus) sum -= r->modulus;
    r->value = sum;
    return *this;
  }
  const auto* o = std::get_if<mpq_class>(&rhs.value_);
  if (!o) mismatch();
  std::get<mpq_class>(value_) += *o;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* o = std::get_if<Residue>(&rhs.value_);
    if (!o || o->modulus != r->modulus) mismatch();
    r->value = mulmod(r->value, o->value, r->modulus);
    return *this;
  }
  const auto* o = std::get_if<mpq_class>(&rhs.value_);
  if (!o) mismatch();
  std::get<mpq_class>(value_) *= *o;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(powmod(r->value, r->modulus - 2, r->modulus), r->modulus);
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Scalar result = field().one();
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (value_.index() != rhs.value_.index()) return false;
  if (const auto* r = std::get_if<Residue>(&value_)) return *r == std::get<Residue>(rhs.value_);
  return std::get<mpq_class>(value_) == std::get<mpq_class>(rhs.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::uint64_t multiplicative_order(const Scalar& x) {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero has no multiplicative order");
  if (const auto* r = std::get_if<Scalar::Residue>(&x.raw())) {
    std::uint64_t p = r->modulus;
    std::uint64_t order = p - 1;
    // Strip prime factors of p - 1 while the power stays 1.
    std::uint64_t m = p - 1;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      while (m % q == 0) m /= q;
      while (order % q == 0 && powmod(r->value, order / q, p) == 1) order /= q;
    }
    if (m > 1) {
      while (order % m == 0 && powmod(r->value, order / m, p) == 1) order /= m;
    }
    return order;
  }
  const auto& q = std::get<mpq_class>(x.raw());
  if (q == 1) return 1;
  if (q == -1) return 2;
  return 0;
}

Scalar primitive_root_of_unity(const Field& field, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
  if (field.is_rationals()) {
    if (n == 1) return field.one();
    if (n == 2) return field.from_int(-1);
    throw Error(ErrorCode::NoRootOfUnity, "Q has no primitive root of unity of order " + std::to_string(n));
  }
  std::uint64_t p = field.characteristic();
  if ((p - 1) % n != 0) {
    throw Error(ErrorCode::NoRootOfUnity,
                field.describe() + " has no primitive root of unity of order " + std::to_string(n));
  }
  std::vector<std::uint64_t> prime_factors;
  for (std::uint64_t q = 2, m = n; m > 1; ++q) {
    if (q * q > m) q = m;
    if (m % q != 0) continue;
    prime_factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  auto has_order_n = [&](std::uint64_t z) {
    if (powmod(z, n, p) != 1) return false;
    for (std::uint64_t q : prime_factors) {
      if (powmod(z, n / q, p) == 1) return false;
    }
    return true;
  };
  for (std::uint64_t h = 2; h < p || n == 1; ++h) {
    std::uint64_t zeta = n == 1 ? 1 : powmod(h, (p - 1) / n, p);
    if (!has_order_n(zeta)) continue;
    // All primitive n-th roots are zeta^k with gcd(k, n) = 1; report the least.
    std::uint64_t best = zeta;
    std::uint64_t power = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
      power = mulmod(power, zeta, p);
      if (std::gcd(k, n) == 1 && power < best) best = power;
    }
    return Scalar(best, p);
  }
  throw Error(ErrorCode::NoRootOfUnity, "search exhausted");
}

}  // namespace skewgin
