#include "core/scalar.hpp"

#include <sstream>

namespace toricq {

namespace {

bool square_free(long k) {
  for (long p = 2; p * p <= k; ++p) {
    if (k % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(long k) {
  if (k < 0) throw Error(ErrorKind::Parse, "radicand must be non-negative");
  if (k == 1) k = 0;  // Q(sqrt(1)) is Q
  if (k != 0 && !square_free(k))
    throw Error(ErrorKind::Parse,
                "radicand " + std::to_string(k) + " is not square-free");
  radicand = k;
}

Scalar::Scalar(Rational a, Rational b, FieldSpec field)
    : a_(std::move(a)), b_(std::move(b)), radicand_(field.radicand) {
  if (field.is_rational() && !b_.is_zero())
    throw Error(ErrorKind::Parse,
                "nonzero radical coefficient in the rational field");
  normalize();
}

Scalar Scalar::sqrt_of(FieldSpec field) {
  if (field.is_rational())
    throw Error(ErrorKind::InvalidArgument, "sqrt_of requires radicand >= 2");
  return Scalar(Rational(0), Rational(1), field);
}

void Scalar::normalize() {
  if (b_.is_zero()) radicand_ = 0;
}

long Scalar::joint_radicand(const Scalar& x, const Scalar& y) {
  if (x.radicand_ == 0) return y.radicand_;
  if (y.radicand_ == 0 || y.radicand_ == x.radicand_) return x.radicand_;
  throw Error(ErrorKind::FieldMismatch,
              "cannot combine sqrt(" + std::to_string(x.radicand_) +
                  ") with sqrt(" + std::to_string(y.radicand_) + ")");
}

int Scalar::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt(k) has the sign of whichever of a^2, b^2*k
  // dominates, carried by the dominating term.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * radicand_;
  const int cmp = lhs.compare(rhs);
  if (cmp == 0) return 0;  // unreachable for square-free k >= 2
  return cmp > 0 ? sa : sb;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  radicand_ = joint_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  radicand_ = joint_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const long k = joint_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * k;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  radicand_ = k;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  const long k = joint_radicand(*this, o);
  // Multiply by the conjugate; the norm a^2 - b^2*k vanishes only at zero.
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * k;
  if (norm.is_zero())
    throw Error(ErrorKind::Internal, "zero norm for nonzero scalar");
  Scalar conj = o;
  conj.b_ = -conj.b_;
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  normalize();
  return *this;
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << a_;
  if (!b_.is_zero()) {
    os << (b_.sign() < 0 ? "-" : "+");
    Rational mag = b_.sign() < 0 ? Rational(-b_) : b_;
    os << mag << "*sqrt(" << radicand_ << ")";
  }
  return os.str();
}

}  // namespace toricq
