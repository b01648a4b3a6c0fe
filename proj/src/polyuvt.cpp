#include "bwc/polyuvt.hpp"

#include "bwc/combinat.hpp"

#include <sstream>

namespace bwc {

void PolyUVT::add_term(int i, int j, int k, const Rational& c) {
    if (c.is_zero()) return;
    Key key{i, j, k};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational PolyUVT::coeff(int i, int j, int k) const {
    auto it = terms_.find(Key{i, j, k});
    return it == terms_.end() ? Rational() : it->second;
}

int PolyUVT::degree_t() const {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.k);
    return d;
}

PolyUVT PolyUVT::operator+(const PolyUVT& o) const {
    PolyUVT r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.i, key.j, key.k, c);
    return r;
}

PolyUVT PolyUVT::operator-(const PolyUVT& o) const {
    PolyUVT r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.i, key.j, key.k, -c);
    return r;
}

PolyUVT PolyUVT::operator*(const PolyUVT& o) const {
    PolyUVT r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add_term(a.i + b.i, a.j + b.j, a.k + b.k, ca * cb);
    return r;
}

PolyUVT PolyUVT::operator*(const Rational& c) const {
    PolyUVT r;
    if (c.is_zero()) return r;
    for (const auto& [key, cc] : terms_) r.add_term(key.i, key.j, key.k, cc * c);
    return r;
}

PolyUVT PolyUVT::shifted(int du, int dv, int dt) const {
    PolyUVT r;
    for (const auto& [key, c] : terms_) {
        // expand (u+du)^i (v+dv)^j (t+dt)^k
        for (int a = 0; a <= key.i; ++a)
            for (int b = 0; b <= key.j; ++b)
                for (int g = 0; g <= key.k; ++g) {
                    BigInt m = binomial(key.i, a) * binomial(key.j, b) * binomial(key.k, g);
                    long long pu = 1, pv = 1, pt = 1;
                    for (int x = 0; x < key.i - a; ++x) pu *= du;
                    for (int x = 0; x < key.j - b; ++x) pv *= dv;
                    for (int x = 0; x < key.k - g; ++x) pt *= dt;
                    r.add_term(a, b, g, c * Rational(m) * Rational(pu) * Rational(pv) * Rational(pt));
                }
    }
    return r;
}

PolyUVT PolyUVT::swapped_uv() const {
    PolyUVT r;
    for (const auto& [key, c] : terms_) r.add_term(key.j, key.i, key.k, c);
    return r;
}

Rational PolyUVT::eval(const Rational& u, const Rational& v, const Rational& t) const {
    Rational s;
    for (const auto& [key, c] : terms_) {
        Rational term = c;
        for (int x = 0; x < key.i; ++x) term *= u;
        for (int x = 0; x < key.j; ++x) term *= v;
        for (int x = 0; x < key.k; ++x) term *= t;
        s += term;
    }
    return s;
}

bool PolyUVT::proportional_to(const PolyUVT& o, Rational* factor) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    Rational f;
    bool have_f = false;
    for (const auto& [key, c] : terms_) {
        Rational oc = o.coeff(key.i, key.j, key.k);
        if (oc.is_zero()) return false;
        Rational ratio = c / oc;
        if (!have_f) { f = ratio; have_f = true; }
        else if (!(ratio == f)) return false;
    }
    if (factor) *factor = f;
    return true;
}

std::string PolyUVT::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (key.i) os << " u^" << key.i;
        if (key.j) os << " v^" << key.j;
        if (key.k) os << " t^" << key.k;
    }
    return os.str();
}

}  // namespace bwc
