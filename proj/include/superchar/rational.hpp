#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace superchar {

using Int = std::int64_t;

// Exact rational on int64 components. Everything in this project stays tiny:
// lattice pairings have denominator dividing 4, Grassmann coefficients are
// bounded by small powers of p.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) { reduce(); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Int as_integer() const {
    if (den_ != 1) throw std::logic_error("rational " + str() + " is not an integer");
    return num_;
  }

  Rational reciprocal() const {
    if (num_ == 0) throw std::logic_error("division by zero rational");
    return Rational(den_, num_);
  }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const { return *this * o.reciprocal(); }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void reduce() {
    if (den_ == 0) throw std::logic_error("zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  Int num_, den_;
};

}  // namespace superchar
