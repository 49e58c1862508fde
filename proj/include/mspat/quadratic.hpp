#pragma once

#include <cstdint>
#include <string>

#include "mspat/bigcount.hpp"
#include "mspat/error.hpp"

namespace mspat {

/// Exact p + q*sqrt(D) with rational p, q and a positive integer radicand D.
/// Values with different radicands never mix.
class QuadraticInteger {
 public:
  QuadraticInteger(Rational rational, Rational irrational, BigCount radicand)
      : p_(std::move(rational)), q_(std::move(irrational)), d_(std::move(radicand)) {
    p_.canonicalize();
    q_.canonicalize();
    if (d_ <= 0) throw Error(ErrorKind::ArithmeticBug, "radicand must be positive");
  }

  static QuadraticInteger rational(Rational value, BigCount radicand) {
    return QuadraticInteger(std::move(value), 0, std::move(radicand));
  }

  /// sqrt(D) itself.
  static QuadraticInteger root(BigCount radicand) { return QuadraticInteger(0, 1, std::move(radicand)); }

  const Rational& rational_part() const { return p_; }
  const Rational& irrational_part() const { return q_; }
  const BigCount& radicand() const { return d_; }

  QuadraticInteger conjugate() const { return QuadraticInteger(p_, -q_, d_); }

  bool is_rational() const { return q_ == 0; }

  /// Lossless conversion; any irrational residue or fractional part is a bug
  /// in the caller's derivation.
  BigCount to_count() const {
    if (q_ != 0) {
      throw Error(ErrorKind::ArithmeticBug, "nonzero irrational residue " + q_.get_str() + "*sqrt(" + d_.get_str() + ")");
    }
    if (p_.get_den() != 1) throw Error(ErrorKind::ArithmeticBug, "non-integral value " + p_.get_str());
    return p_.get_num();
  }

  QuadraticInteger& operator+=(const QuadraticInteger& o) {
    same_field(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  QuadraticInteger& operator-=(const QuadraticInteger& o) {
    same_field(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  QuadraticInteger& operator*=(const QuadraticInteger& o) {
    same_field(o);
    Rational p = p_ * o.p_ + q_ * o.q_ * Rational(d_);
    Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
  }
  QuadraticInteger& operator*=(const Rational& s) {
    p_ *= s;
    q_ *= s;
    return *this;
  }
  QuadraticInteger& operator/=(const Rational& s) {
    if (s == 0) throw Error(ErrorKind::ArithmeticBug, "division by zero");
    p_ /= s;
    q_ /= s;
    return *this;
  }

  friend QuadraticInteger operator+(QuadraticInteger a, const QuadraticInteger& b) { return a += b; }
  friend QuadraticInteger operator-(QuadraticInteger a, const QuadraticInteger& b) { return a -= b; }
  friend QuadraticInteger operator*(QuadraticInteger a, const QuadraticInteger& b) { return a *= b; }
  friend QuadraticInteger operator*(QuadraticInteger a, const Rational& s) { return a *= s; }
  friend QuadraticInteger operator/(QuadraticInteger a, const Rational& s) { return a /= s; }

  /// Square-and-multiply.
  QuadraticInteger pow(std::uint64_t exponent) const {
    QuadraticInteger result = rational(1, d_);
    QuadraticInteger base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent) base *= base;
    }
    return result;
  }

  friend bool operator==(const QuadraticInteger& a, const QuadraticInteger& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

  std::string str() const { return p_.get_str() + " + " + q_.get_str() + "*sqrt(" + d_.get_str() + ")"; }

 private:
  void same_field(const QuadraticInteger& o) const {
    if (o.d_ != d_) throw Error(ErrorKind::ArithmeticBug, "mixed radicands");
  }

  Rational p_;
  Rational q_;
  BigCount d_;
};

}  // namespace mspat
