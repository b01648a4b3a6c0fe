#pragma once

#include "bwc/bigint.hpp"

#include <string>

namespace bwc {

// Exact rational, always normalized: gcd(num,den)=1, den>0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // Exact value of an IEEE double (mantissa * 2^exp).
    static Rational from_double(double x);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(-num_, den_, no_normalize{}); }
    Rational operator+(const Rational& o) const { return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rational operator-(const Rational& o) const { return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        return (num_ * o.den_) <=> (o.num_ * den_);
    }

    Rational abs() const { return Rational(num_.abs(), den_, no_normalize{}); }
    BigInt floor() const { return BigInt::div_floor(num_, den_); }
    BigInt ceil() const { return BigInt::div_ceil(num_, den_); }

    double to_double() const;
    std::string to_string() const {
        return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
    }

  private:
    struct no_normalize {};
    Rational(BigInt n, BigInt d, no_normalize) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    BigInt num_, den_;
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long long a, const Rational& b) { return Rational(a) / b; }

}  // namespace bwc
