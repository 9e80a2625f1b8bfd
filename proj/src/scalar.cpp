#include "wmha/scalar.hpp"

#include <cctype>

namespace wmha {

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw SpecError("empty rational literal");
  std::string t = text;
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) {
      throw SpecError("bad rational literal: " + text);
    }
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw SpecError("bad rational literal: " + text);
  if (q.get_den() == 0) throw SpecError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Scalar Scalar::of(long num, long den) {
  if (den == 0) throw MathError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  // 1/(a+bi) = (a-bi)/(a^2+b^2)
  mpq_class n = re_ * re_ + im_ * im_;
  return {re_ / n, -im_ / n};
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out += re_.get_str();
  if (im_ != 0) {
    if (im_ == 1) {
      out += out.empty() ? "i" : "+i";
    } else if (im_ == -1) {
      out += "-i";
    } else {
      std::string s = im_.get_str();
      if (!out.empty() && s[0] != '-') out += "+";
      out += s + "i";
    }
  }
  return out;
}

}  // namespace wmha
