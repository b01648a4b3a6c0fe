#include "bwc/bigint.hpp"

#include <algorithm>
#include <cmath>

namespace bwc {

BigInt::BigInt(long long v) {
    neg_ = v < 0;
    unsigned long long m = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (m) { mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu)); m >>= 32; }
}

BigInt::BigInt(unsigned long long m) {
    while (m) { mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu)); m >>= 32; }
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty string");
    BigInt acc;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * BigInt(10) + BigInt(s[i] - '0');
    }
    *this = acc;
    if (!mag_.empty()) neg_ = neg;
}

BigInt BigInt::pow2(unsigned e) {
    BigInt r;
    r.mag_.assign(e / 32 + 1, 0);
    r.mag_[e / 32] = uint32_t(1) << (e % 32);
    r.trim();
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[x.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (int64_t(1) << 32); borrow = 1; } else borrow = 0;
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t s = r[k] + carry;
            r[k] = static_cast<uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.mag_ = sub_mag(mag_, o.mag_); r.neg_ = neg_; }
        else       { r.mag_ = sub_mag(o.mag_, mag_); r.neg_ = o.neg_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.neg_ = !r.mag_.empty() && (neg_ != o.neg_);
    return r;
}

size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    size_t bits = (mag_.size() - 1) * 32;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

bool BigInt::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= mag_.size()) return false;
    return (mag_[limb] >> (i % 32)) & 1u;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    // binary long division on magnitudes
    BigInt bm = b.abs();
    q = BigInt();
    r = BigInt();
    size_t n = a.bit_length();
    if (n > 0) q.mag_.assign((n + 31) / 32, 0);
    for (size_t i = n; i-- > 0;) {
        // r = 2r + bit_i(a)
        uint32_t carry = a.bit(i) ? 1u : 0u;
        for (size_t k = 0; k < r.mag_.size(); ++k) {
            uint32_t nv = (r.mag_[k] << 1) | carry;
            carry = r.mag_[k] >> 31;
            r.mag_[k] = nv;
        }
        if (carry) r.mag_.push_back(carry);
        if (cmp_mag(r.mag_, bm.mag_) >= 0) {
            r.mag_ = sub_mag(r.mag_, bm.mag_);
            q.mag_[i / 32] |= uint32_t(1) << (i % 32);
        }
    }
    q.trim(); r.trim();
    // truncated semantics: sign of q = sign(a)*sign(b), r keeps sign of a
    q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.mag_.empty() && a.neg_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::div_floor(const BigInt& a, const BigInt& b) {
    if (b.sign() <= 0) throw std::domain_error("div_floor: denominator must be positive");
    BigInt q, r;
    divmod(a, b, q, r);
    if (r.sign() < 0) q -= BigInt(1);
    return q;
}

BigInt BigInt::div_ceil(const BigInt& a, const BigInt& b) {
    if (b.sign() <= 0) throw std::domain_error("div_ceil: denominator must be positive");
    BigInt q, r;
    divmod(a, b, q, r);
    if (r.sign() > 0) q += BigInt(1);
    return q;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false; b.neg_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(mag_, o.mag_);
    if (neg_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return neg_ ? v <= 0x8000000000000000ull : v <= 0x7fffffffffffffffull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    unsigned long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return neg_ ? -static_cast<long long>(v) : static_cast<long long>(v);
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return neg_ ? -r : r;
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return "0";
    std::vector<uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        // divide magnitude by 10^9
        uint64_t rem = 0;
        for (size_t i = tmp.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | tmp[i];
            tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace bwc
