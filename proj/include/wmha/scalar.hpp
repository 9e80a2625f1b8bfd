#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wmha {

/// Thrown on malformed input files or spec payloads (CLI exit code 2).
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a mathematical precondition is violated (division by zero,
/// missing regular slices, covering or factorization failures, ...).
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse a rational literal "p", "-p" or "p/q" into canonical form.
mpq_class parse_rational(const std::string& text);

/// A Gaussian rational re + im*i. All arithmetic is exact; fractions are
/// kept in lowest terms with positive denominator (GMP canonical form).
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit on purpose
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar of(long num, long den);  // num/den, real
  static Scalar parse(const std::string& re, const std::string& im);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar operator+(const Scalar& o) const { return {re_ + o.re_, im_ + o.im_}; }
  Scalar operator-(const Scalar& o) const { return {re_ - o.re_, im_ - o.im_}; }
  Scalar operator-() const { return {-re_, -im_}; }
  Scalar operator*(const Scalar& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws MathError on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  /// Complex conjugate.
  Scalar conj() const { return {re_, -im_}; }

  bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Compact display form, e.g. "0", "5/6", "2-3i", "i".
  std::string str() const;

 private:
  mpq_class re_, im_;
};

}  // namespace wmha
