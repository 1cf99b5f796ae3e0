#ifndef TORSIONLAB_SCALAR_HPP
#define TORSIONLAB_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "torsionlab/errors.hpp"

namespace torsionlab {

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision rational, always in lowest terms with a
// positive denominator (mpq canonical form).
// ---------------------------------------------------------------------------
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "p/q", optional leading '-' and surrounding whitespace.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / v_, NoCanon{});
  }

  // Integer power; negative exponents invert.
  Rational pow(long e) const;

  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw ParseError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(q);
}

inline Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// QuadExt: element a + b*sqrt(d) of the quadratic field Q(sqrt d).  d is a
// fixed square-free positive integer per computation context; a value with
// d == 0 is a plain rational compatible with any ambient d.
// ---------------------------------------------------------------------------
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(long n) : a_(n), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw DomainError("negative radicand");
    if (d_ == 0 && !b_.is_zero()) throw DomainError("radical part without a radicand");
    if (d_ != 0) check_radicand(d_);
    normalize();
  }

  static QuadExt sqrt_d(long d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  long radicand() const { return d_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Raw{}); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    long d = unify(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d, Raw{});
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long d = unify(x, y);
    Rational rad(d);
    return QuadExt(x.a_ * y.a_ + rad * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d, Raw{});
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    unify(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // Exact sign of a + b*sqrt(d).  Since d is not a perfect square the value
  // vanishes only when both parts do.
  int sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    Rational cmp = a_ * a_ - Rational(d_) * b_ * b_;
    return cmp.sign() > 0 ? a_.sign() : b_.sign();
  }
  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, Raw{}); }
  QuadExt inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rational norm = a_ * a_ - Rational(d_) * b_ * b_;
    return QuadExt(a_ / norm, -b_ / norm, d_, Raw{});
  }

  double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_)); }
  std::string to_string() const;
  static QuadExt parse(const std::string& text, long ambient_d);

 private:
  struct Raw {};
  QuadExt(Rational a, Rational b, long d, Raw) : a_(std::move(a)), b_(std::move(b)), d_(d) { normalize(); }

  void normalize() {
    if (b_.is_zero()) d_ = 0;
  }
  static void check_radicand(long d) {
    if (d <= 1) throw DomainError("radicand must be > 1");
    for (long k = 2; k * k <= d; ++k)
      if (d % (k * k) == 0) throw DomainError("radicand must be square-free");
  }
  static long unify(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw DomainError("mixed radicands " + std::to_string(x.d_) + " and " + std::to_string(y.d_));
  }

  Rational a_, b_;
  long d_;
};

inline std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string();
  if (b_.sign() < 0)
    out += "-";
  else if (!a_.is_zero())
    out += "+";
  Rational mag = b_.abs();
  if (mag != Rational(1)) out += mag.to_string();
  out += "√" + std::to_string(d_);
  return out;
}

inline QuadExt QuadExt::parse(const std::string& text, long ambient_d) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const std::string radical = "√";
  size_t pos = s.find(radical);
  if (pos == std::string::npos) {
    size_t alt = s.find("sqrt");
    if (alt == std::string::npos) return QuadExt(Rational::parse(s));
    pos = alt;
    s = s.substr(0, alt) + radical + s.substr(alt + 4);
    pos = s.find(radical);
  }
  long d = 0;
  try {
    d = std::stol(s.substr(pos + radical.size()));
  } catch (const std::exception&) {
    throw ParseError("bad radicand in '" + text + "'");
  }
  if (ambient_d != 0 && d != ambient_d)
    throw ParseError("radicand " + std::to_string(d) + " does not match field sqrt(" +
                     std::to_string(ambient_d) + ")");
  std::string head = s.substr(0, pos);
  // head is "", "-", "c", "a+c" or "a-c" with a, c rational literals.
  Rational a(0), b(1);
  if (!head.empty()) {
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
          head[i - 1] != '-') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      b = head == "-" ? Rational(-1) : Rational::parse(head);
    } else {
      a = Rational::parse(head.substr(0, split));
      std::string coef = head.substr(split);
      if (coef == "+")
        b = Rational(1);
      else if (coef == "-")
        b = Rational(-1);
      else
        b = Rational::parse(coef);
    }
  }
  return QuadExt(a, b, d);
}

// ---------------------------------------------------------------------------
// Approx: double with a single global comparison tolerance.  Equality is
// |x-y| <= tol * max(1, |x|, |y|).
// ---------------------------------------------------------------------------
class Approx {
 public:
  Approx() : v_(0.0) {}
  Approx(double v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Approx(long v) : v_(static_cast<double>(v)) {}  // NOLINT(google-explicit-constructor)

  static double tolerance() { return tol_; }
  static void set_tolerance(double t) {
    if (!(t > 0)) throw DomainError("tolerance must be positive");
    tol_ = t;
  }

  double value() const { return v_; }

  Approx operator-() const { return Approx(-v_); }
  Approx& operator+=(const Approx& o) { v_ += o.v_; return *this; }
  Approx& operator-=(const Approx& o) { v_ -= o.v_; return *this; }
  Approx& operator*=(const Approx& o) { v_ *= o.v_; return *this; }
  Approx& operator/=(const Approx& o) { v_ /= o.v_; return *this; }

  friend Approx operator+(Approx a, const Approx& b) { return a += b; }
  friend Approx operator-(Approx a, const Approx& b) { return a -= b; }
  friend Approx operator*(Approx a, const Approx& b) { return a *= b; }
  friend Approx operator/(Approx a, const Approx& b) { return a /= b; }

  friend bool operator==(const Approx& a, const Approx& b) {
    double scale = std::max({1.0, std::fabs(a.v_), std::fabs(b.v_)});
    return std::fabs(a.v_ - b.v_) <= tol_ * scale;
  }
  friend bool operator!=(const Approx& a, const Approx& b) { return !(a == b); }

  bool is_zero() const { return *this == Approx(0.0); }
  int sign() const { return is_zero() ? 0 : (v_ < 0 ? -1 : 1); }
  Approx abs() const { return Approx(std::fabs(v_)); }
  Approx inverse() const {
    if (is_zero()) throw DomainError("inverse of (numerical) zero");
    return Approx(1.0 / v_);
  }

  double to_double() const { return v_; }
  std::string to_string() const;

 private:
  static inline double tol_ = 1e-9;
  double v_;
};

inline std::string Approx::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v_);
  return buf;
}

// ---------------------------------------------------------------------------
// Field trait glue used by the generic linear algebra kernel.
// ---------------------------------------------------------------------------
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static const char* name() { return "rational"; }
  static Rational from_int(long n) { return Rational(n); }
  static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct FieldTraits<QuadExt> {
  static constexpr bool exact = true;
  static const char* name() { return "quad"; }
  static QuadExt from_int(long n) { return QuadExt(n); }
  static QuadExt from_rational(const Rational& r) { return QuadExt(r); }
};

template <>
struct FieldTraits<Approx> {
  static constexpr bool exact = false;
  static const char* name() { return "float"; }
  static Approx from_int(long n) { return Approx(n); }
  static Approx from_rational(const Rational& r) { return Approx(r.to_double()); }
};

template <class K>
K scalar_pow(const K& x, long e) {
  if (e == 0) return FieldTraits<K>::from_int(1);
  K base = e < 0 ? x.inverse() : x;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  K acc = FieldTraits<K>::from_int(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace torsionlab

#endif  // TORSIONLAB_SCALAR_HPP
