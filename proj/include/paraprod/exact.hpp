#ifndef PARAPROD_EXACT_HPP
#define PARAPROD_EXACT_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace paraprod {

using Rational = mpq_class;

/// Complex numbers with exact rational real and imaginary parts.
/// Closed under +, -, *, and division by nonzero values; used wherever the
/// operator identities have to hold with bit-exact equality.
class ExactComplex {
 public:
  ExactComplex() : re_(0), im_(0) {}
  ExactComplex(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(int v) : re_(v), im_(0) {}   // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re, Rational im = Rational(0))
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Builds (pn/pd) + (qn/qd) i.
  static ExactComplex ratio(long pn, long pd, long qn = 0, long qd = 1) {
    if (pd == 0 || qd == 0) throw std::invalid_argument("ExactComplex: zero denominator");
    Rational re(pn, pd);
    re.canonicalize();
    Rational im(qn, qd);
    im.canonicalize();
    return ExactComplex(re, im);
  }

  /// Parses "p/q" or "p" (decimal integers, optional sign).
  static Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        Rational q(s);
        q.canonicalize();
        return q;
      }
      Rational q(s.substr(0, slash) + "/" + s.substr(slash + 1));
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("ExactComplex: cannot parse rational '" + s + "'");
    }
  }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  ExactComplex conj() const { return ExactComplex(re_, -im_); }

  /// |z|^2 as an exact rational.
  Rational abs2() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_double() const { return {re_.get_d(), im_.get_d()}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend ExactComplex operator-(const ExactComplex& a) { return ExactComplex(-a.re_, -a.im_); }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational d = b.abs2();
    if (d == 0) throw std::domain_error("ExactComplex: division by zero");
    return ExactComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                        (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  ExactComplex& operator+=(const ExactComplex& o) { *this = *this + o; return *this; }
  ExactComplex& operator-=(const ExactComplex& o) { *this = *this - o; return *this; }
  ExactComplex& operator*=(const ExactComplex& o) { *this = *this * o; return *this; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  std::string str() const {
    auto rs = re_.get_str();
    auto is = im_.get_str();
    if (im_ == 0) return rs;
    return rs + (im_ > 0 ? "+" : "") + is + "i";
  }

 private:
  Rational re_, im_;
};

inline ExactComplex exact_i() { return ExactComplex(Rational(0), Rational(1)); }

}  // namespace paraprod

#endif  // PARAPROD_EXACT_HPP
