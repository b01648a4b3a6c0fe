#pragma once

#include "bwc/rational.hpp"

#include <map>
#include <string>

namespace bwc {

// Exact-rational polynomial in the variables (u, v, t).
class PolyUVT {
  public:
    struct Key {
        int i = 0, j = 0, k = 0;   // exponents of u, v, t
        auto operator<=>(const Key&) const = default;
    };

    PolyUVT() = default;
    explicit PolyUVT(const Rational& c) { add_term(0, 0, 0, c); }
    static PolyUVT var_u() { PolyUVT p; p.add_term(1, 0, 0, 1); return p; }
    static PolyUVT var_v() { PolyUVT p; p.add_term(0, 1, 0, 1); return p; }
    static PolyUVT var_t() { PolyUVT p; p.add_term(0, 0, 1, 1); return p; }

    void add_term(int i, int j, int k, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int i, int j, int k) const;
    bool is_zero() const { return terms_.empty(); }
    int degree_t() const;

    PolyUVT operator+(const PolyUVT& o) const;
    PolyUVT operator-(const PolyUVT& o) const;
    PolyUVT operator*(const PolyUVT& o) const;
    PolyUVT operator*(const Rational& c) const;
    PolyUVT& operator+=(const PolyUVT& o) { *this = *this + o; return *this; }
    PolyUVT& operator-=(const PolyUVT& o) { *this = *this - o; return *this; }

    bool operator==(const PolyUVT& o) const { return terms_ == o.terms_; }

    // substitute u -> u + du, v -> v + dv, t -> t + dt
    PolyUVT shifted(int du, int dv, int dt) const;
    // swap the roles of u and v
    PolyUVT swapped_uv() const;
    bool symmetric_uv() const { return *this == swapped_uv(); }

    Rational eval(const Rational& u, const Rational& v, const Rational& t) const;
    Rational eval(long long u, long long v, long long t) const {
        return eval(Rational(u), Rational(v), Rational(t));
    }

    // proportionality: *this == c * o for some c != 0
    bool proportional_to(const PolyUVT& o, Rational* factor = nullptr) const;

    std::string to_string() const;

  private:
    std::map<Key, Rational> terms_;   // nonzero coefficients only
};

}  // namespace bwc
