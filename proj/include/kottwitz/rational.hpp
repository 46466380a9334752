#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kottwitz {

// Exact rational arithmetic over 64-bit integers. Every quantity this
// library touches (root pairings, weight multiplicities, Jantzen
// valuations) stays tiny, but products are still routed through a
// checked 128-bit multiply so silent wraparound is impossible.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  long long to_integer() const {
    if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
    return num_;
  }

  Rational operator-() const { return make_raw(-num_, den_); }

  Rational operator+(const Rational& o) const {
    long long g = std::gcd(den_, o.den_);
    long long l = checked_mul(den_ / g, o.den_);
    long long a = checked_mul(num_, o.den_ / g);
    long long b = checked_mul(o.num_, den_ / g);
    return Rational(checked_add(a, b), l);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    long long g1 = std::gcd(std::abs(num_), o.den_);
    long long g2 = std::gcd(std::abs(o.num_), den_);
    return make_raw(checked_mul(num_ / g1, o.num_ / g2),
                    checked_mul(den_ / g2, o.den_ / g1));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    Rational inv = o.num_ > 0 ? make_raw(o.den_, o.num_) : make_raw(-o.den_, -o.num_);
    return *this * inv;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

private:
  long long num_, den_;

  static Rational make_raw(long long n, long long d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  static long long checked_mul(long long a, long long b) {
    __int128 p = (__int128)a * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("Rational: multiply overflow");
    return (long long)p;
  }
  static long long checked_add(long long a, long long b) {
    __int128 s = (__int128)a + b;
    if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("Rational: add overflow");
    return (long long)s;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
};

}  // namespace kottwitz
