#ifndef HILBCAT_SCALAR_HPP
#define HILBCAT_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbcat {

/// Raised when an operation is called outside its precondition
/// (dimension mismatch, non-mono input, ...).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when scalar text cannot be read.
class scalar_syntax_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rational = mpq_class;

/// An exact Gaussian rational re + im*i. Both parts are kept in lowest
/// terms with a positive denominator, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }
  static Scalar ratio(long num, long den, bool imaginary = false) {
    if (den == 0) throw usage_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return imaginary ? Scalar(0, q) : Scalar(q, 0);
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// s * conj(s), always a non-negative rational.
  Rational norm_squared() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

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
  Scalar& operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw usage_error("division by zero scalar");
    Rational n = o.norm_squared();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); only used for canonical orderings.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical text: `3`, `-1/2`, `i`, `-2/5*i`, `1/2+3*i`, `1-i`.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
      Rational mag = abs(im_);
      if (sgn(im_) < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      out += (mag == 1) ? std::string("i") : mag.get_str() + "*i";
    }
    return out;
  }

  /// Reads the scalar syntax: a sum of signed terms, each either a rational
  /// `a` or `a/b`, or an imaginary term `i`, `a*i`, `a/b*i`. Whitespace is
  /// ignored.
  static Scalar parse(std::string_view text) {
    std::string s;
    bool gap = false;
    for (char c : text) {
      auto u = static_cast<unsigned char>(c);
      if (std::isspace(u)) {
        gap = !s.empty();
        continue;
      }
      // Spaces may separate tokens but not split a number.
      if (gap && std::isdigit(u) && std::isdigit(static_cast<unsigned char>(s.back()))) {
        throw scalar_syntax_error("bad scalar '" + std::string(text) + "': digits separated by space");
      }
      gap = false;
      s.push_back(c);
    }
    if (s.empty()) throw scalar_syntax_error("empty scalar");
    Rational re = 0, im = 0;
    std::size_t pos = 0;
    bool first = true;
    auto fail = [&](const char* what) {
      throw scalar_syntax_error("bad scalar '" + std::string(text) + "': " + what);
    };
    auto read_int = [&]() -> std::string {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected digits");
      return s.substr(start, pos - start);
    };
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      if (pos >= s.size()) fail("dangling sign");
      if (s[pos] == 'i') {
        ++pos;
        im += sign;
        continue;
      }
      Rational q(read_int());
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        Rational den(read_int());
        if (sgn(den) == 0) fail("zero denominator");
        q /= den;
      }
      q.canonicalize();
      if (sign < 0) q = -q;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'i') fail("expected 'i' after '*'");
        ++pos;
        im += q;
      } else {
        re += q;
      }
    }
    return Scalar(re, im);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline Scalar conj(const Scalar& s) { return s.conj(); }

}  // namespace hilbcat

#endif  // HILBCAT_SCALAR_HPP
