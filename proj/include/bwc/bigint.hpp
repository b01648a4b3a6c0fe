#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <stdexcept>
#include <compare>

namespace bwc {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
// Sizes in this project stay in the hundreds of digits, so the simple
// schoolbook algorithms are plenty.
class BigInt {
  public:
    BigInt() = default;
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long long v);
    BigInt(unsigned long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt pow2(unsigned e);

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated division (C semantics: quotient rounds toward zero).
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    // Floor/ceil division for positive denominators.
    static BigInt div_floor(const BigInt& a, const BigInt& b);
    static BigInt div_ceil(const BigInt& a, const BigInt& b);
    static BigInt gcd(BigInt a, BigInt b);
    BigInt abs() const { BigInt r = *this; r.neg_ = false; return r; }

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    std::strong_ordering operator<=>(const BigInt& o) const;

    bool fits_int64() const;
    long long to_int64() const;   // throws if out of range
    double to_double() const;
    std::string to_string() const;

    size_t bit_length() const;

  private:
    bool neg_ = false;
    std::vector<uint32_t> mag_;   // little-endian limbs, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    bool bit(size_t i) const;
};

inline BigInt operator+(long long a, const BigInt& b) { return BigInt(a) + b; }
inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

}  // namespace bwc
