#ifndef TORICQ_SCALAR_HPP
#define TORICQ_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "core/errors.hpp"

namespace toricq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Ambient coefficient field: Q when radicand is 0, otherwise Q(sqrt(k))
/// for a square-free integer k >= 2.
struct FieldSpec {
  long radicand = 0;

  FieldSpec() = default;
  explicit FieldSpec(long k);

  bool is_rational() const { return radicand == 0; }
  bool operator==(const FieldSpec&) const = default;
};

/// Exact element a + b*sqrt(k) of Q(sqrt(k)).
///
/// Canonical form: rationals in lowest terms (cpp_rational maintains this),
/// and b = 0 forces radicand 0, so structural equality is value equality.
/// A scalar with b = 0 is a plain rational and combines freely with scalars
/// of any field; mixing two distinct nontrivial radicands is an error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT: implicit on purpose
  Scalar(Rational a) : a_(std::move(a)) {}
  Scalar(Rational a, Rational b, FieldSpec field);

  static Scalar sqrt_of(FieldSpec field);

  const Rational& rat_part() const { return a_; }
  const Rational& rad_part() const { return b_; }
  long radicand() const { return radicand_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Exact sign in the real embedding with sqrt(k) > 0.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  bool operator==(const Scalar& o) const {
    return a_ == o.a_ && b_ == o.b_ && radicand_ == o.radicand_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

  std::string str() const;

 private:
  // Radicand of the two operands, after checking compatibility.
  static long joint_radicand(const Scalar& x, const Scalar& y);
  void normalize();

  Rational a_;
  Rational b_;
  long radicand_ = 0;
};

}  // namespace toricq

#endif
