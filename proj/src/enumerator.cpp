#include "bwc/enumerator.hpp"

#include "bwc/combinat.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bwc {

WeightEnumerator::WeightEnumerator(int len, std::vector<BigInt> cs) : n(len), coeffs(std::move(cs)) {
    if (n < 1 || n > 64) throw std::invalid_argument("WeightEnumerator: bad length");
    if (static_cast<int>(coeffs.size()) != n + 1)
        throw std::invalid_argument("WeightEnumerator: need n+1 coefficients");
    for (const BigInt& c : coeffs)
        if (c.sign() < 0) throw std::invalid_argument("WeightEnumerator: negative coefficient");
}

BigInt WeightEnumerator::code_size() const {
    BigInt s(0);
    for (const BigInt& c : coeffs) s += c;
    return s;
}

WeightEnumerator WeightEnumerator::of_code(const Code& c) {
    std::vector<BigInt> cs(c.n + 1, BigInt(0));
    for (uint64_t w : c.words) cs[std::popcount(w)] += BigInt(1);
    WeightEnumerator e(c.n, std::move(cs));
    e.name = "computed";
    return e;
}

BigInt enumerator_partial_sum(const WeightEnumerator& w, int wt, SumDirection dir) {
    if (wt < 0 || wt > w.n) throw std::invalid_argument("enumerator_partial_sum: weight out of range");
    BigInt s(0);
    if (dir == SumDirection::AtMost) {
        for (int i = 0; i <= wt; ++i) s += w.coeffs[i];
    } else {
        for (int i = wt; i <= w.n; ++i) s += w.coeffs[i];
    }
    return s;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& w, const BigInt& code_size) {
    if (code_size.sign() <= 0) throw std::invalid_argument("macwilliams_transform: code size must be positive");
    const int n = w.n;
    // A'_j = (1/|C|) sum_i A_i K_j(i), K_j the Krawtchouk polynomial.
    std::vector<BigInt> dual(n + 1, BigInt(0));
    for (int j = 0; j <= n; ++j) {
        BigInt s(0);
        for (int i = 0; i <= n; ++i) {
            if (w.coeffs[i].is_zero()) continue;
            s += w.coeffs[i] * krawtchouk(n, j, i);
        }
        BigInt q, r;
        BigInt::divmod(s, code_size, q, r);
        if (!r.is_zero() || q.sign() < 0)
            throw std::invalid_argument("macwilliams_transform: input is not a valid linear-code enumerator");
        dual[j] = q;
    }
    WeightEnumerator out(n, std::move(dual));
    out.name = w.name.empty() ? "dual" : "dual of " + w.name;
    out.source = "macwilliams_transform";
    return out;
}

WeightEnumerator load_enumerator(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_enumerator: cannot open " + path);
    nlohmann::json j;
    in >> j;
    int n = j.at("n").get<int>();
    std::vector<BigInt> cs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string()) cs.emplace_back(c.get<std::string>());
        else cs.emplace_back(static_cast<long long>(c.get<int64_t>()));
    }
    WeightEnumerator w(n, std::move(cs));
    w.name = j.value("name", "");
    w.source = j.value("source", "");
    return w;
}

void save_enumerator(const WeightEnumerator& w, const std::string& path) {
    nlohmann::json j;
    j["n"] = w.n;
    nlohmann::json cs = nlohmann::json::array();
    for (const BigInt& c : w.coeffs) {
        if (c.fits_int64()) cs.push_back(c.to_int64());
        else cs.push_back(c.to_string());
    }
    j["coeffs"] = cs;
    j["name"] = w.name;
    j["source"] = w.source;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_enumerator: cannot open " + path);
    out << j.dump(2) << "\n";
}

}  // namespace bwc
