#include "bwc/rational.hpp"

#include <cmath>

namespace bwc {

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (g > BigInt(1)) { num_ = num_ / g; den_ = den_ / g; }
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational::from_double: not finite");
    if (x == 0.0) return Rational();
    int exp = 0;
    double m = std::frexp(x, &exp);   // x = m * 2^exp, |m| in [0.5, 1)
    // shift mantissa to an integer (53 bits)
    long long mi = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r{BigInt(mi)};
    if (exp >= 0) return Rational(r.num() * BigInt::pow2(static_cast<unsigned>(exp)));
    return Rational(r.num(), BigInt::pow2(static_cast<unsigned>(-exp)));
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale so both parts fit a double comfortably
    long long shift = static_cast<long long>(num_.bit_length()) - static_cast<long long>(den_.bit_length());
    BigInt n = num_, d = den_;
    // bring both to <= ~900 bits difference-free representation via shifting the larger
    auto shr = [](const BigInt& v, long long k) {
        BigInt q, r;
        BigInt::divmod(v, BigInt::pow2(static_cast<unsigned>(k)), q, r);
        return q;
    };
    long long nb = static_cast<long long>(n.bit_length());
    long long db = static_cast<long long>(d.bit_length());
    long long drop_n = nb > 512 ? nb - 512 : 0;
    long long drop_d = db > 512 ? db - 512 : 0;
    if (drop_n) n = shr(n, drop_n);
    if (drop_d) d = shr(d, drop_d);
    double r = n.to_double() / d.to_double();
    return std::ldexp(r, static_cast<int>(drop_n - drop_d));
    (void)shift;
}

}  // namespace bwc
