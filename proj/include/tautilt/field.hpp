#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tautilt {

using Scalar = mpq_class;

/// Base field: exact rationals, or a prime field Z/p with p > 2.
///
/// Prime-field scalars are stored as canonical integers in [0, p). Every
/// arithmetic helper returns a reduced value, so callers never need to
/// normalize by hand.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rational() { return Field(); }
  static Field prime(const mpz_class& p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  /// 0 for the rationals.
  const mpz_class& characteristic() const { return p_; }

  /// True when char = 0 or char > n.
  bool characteristic_exceeds(std::size_t n) const;

  Scalar reduce(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Accepts decimal integers and "p/q" strings.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& x) const;

  bool operator==(const Field& other) const { return kind_ == other.kind_ && p_ == other.p_; }

 private:
  Field() = default;

  Kind kind_ = Kind::Rational;
  mpz_class p_ = 0;
};

}  // namespace tautilt
