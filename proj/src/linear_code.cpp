#include "bwc/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bwc {

Code GeneratorMatrix::span() const {
    if (k < 0 || k > 24) throw std::invalid_argument("span: k out of range");
    std::vector<uint64_t> words;
    words.reserve(size_t(1) << k);
    for (uint64_t m = 0; m < (uint64_t(1) << k); ++m) {
        uint64_t w = 0;
        uint64_t mm = m;
        while (mm) {
            int i = std::countr_zero(mm);
            w ^= rows[i];
            mm &= mm - 1;
        }
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (static_cast<int>(words.size()) != (1 << k))
        throw std::runtime_error("span: generator rows are linearly dependent");
    return Code(n, std::move(words));
}

GeneratorMatrix GeneratorMatrix::dual() const {
    // nullspace of the row space: Gaussian elimination on the rows
    std::vector<uint64_t> mat = rows;
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(n, false);
    int r = 0;
    for (int c = 0; c < n && r < static_cast<int>(mat.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(mat.size()); ++i)
            if ((mat[i] >> c) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(mat[r], mat[p]);
        for (int i = 0; i < static_cast<int>(mat.size()); ++i)
            if (i != r && ((mat[i] >> c) & 1)) mat[i] ^= mat[r];
        is_pivot[c] = true;
        pivot_of_row.push_back(c);
        ++r;
    }
    GeneratorMatrix d;
    d.n = n;
    d.k = n - r;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        uint64_t v = uint64_t(1) << c;
        for (int i = 0; i < r; ++i)
            if ((mat[i] >> c) & 1) v |= uint64_t(1) << pivot_of_row[i];
        d.rows.push_back(v);
    }
    return d;
}

GeneratorMatrix load_generator(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_generator: cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("load_generator: empty file " + path);
    GeneratorMatrix g;
    if (sscanf(header.c_str(), "n=%d k=%d", &g.n, &g.k) != 2)
        throw std::runtime_error("load_generator: bad header in " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        BinaryWord w = BinaryWord::from_string(line);
        if (w.n != g.n) throw std::runtime_error("load_generator: row length mismatch in " + path);
        g.rows.push_back(w.bits);
    }
    if (static_cast<int>(g.rows.size()) != g.k)
        throw std::runtime_error("load_generator: row count mismatch in " + path);
    return g;
}

void save_generator(const GeneratorMatrix& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_generator: cannot open " + path);
    out << "n=" << g.n << " k=" << g.k << "\n";
    for (uint64_t r : g.rows) out << BinaryWord(g.n, r).to_string() << "\n";
}

GeneratorMatrix hamming_7_4() {
    // systematic [7,4,3]: data bits + parity columns
    GeneratorMatrix g;
    g.n = 7; g.k = 4;
    auto row = [](const char* s) { return BinaryWord::from_string(s).bits; };
    g.rows = {row("1000110"), row("0100101"), row("0010011"), row("0001111")};
    return g;
}

GeneratorMatrix simplex_7_3() {
    // columns are the 7 nonzero vectors of GF(2)^3
    GeneratorMatrix g;
    g.n = 7; g.k = 3;
    for (int b = 0; b < 3; ++b) {
        uint64_t r = 0;
        for (int c = 0; c < 7; ++c)
            if (((c + 1) >> b) & 1) r |= uint64_t(1) << c;
        g.rows.push_back(r);
    }
    return g;
}

GeneratorMatrix reed_muller(int r, int m) {
    if (m < 1 || m > 6 || r < 0 || r > m) throw std::invalid_argument("reed_muller: bad parameters");
    int n = 1 << m;
    GeneratorMatrix g;
    g.n = n;
    // rows = evaluations of monomials of degree <= r on all points of GF(2)^m
    for (int deg = 0; deg <= r; ++deg) {
        for (uint32_t mono = 0; mono < (uint32_t(1) << m); ++mono) {
            if (std::popcount(mono) != deg) continue;
            uint64_t row = 0;
            for (int x = 0; x < n; ++x)
                if ((static_cast<uint32_t>(x) & mono) == mono) row |= uint64_t(1) << x;
            g.rows.push_back(row);
        }
    }
    g.k = static_cast<int>(g.rows.size());
    return g;
}

GeneratorMatrix cyclic_code(int n, uint64_t gpoly, int deg) {
    GeneratorMatrix g;
    g.n = n;
    g.k = n - deg;
    for (int i = 0; i < g.k; ++i) g.rows.push_back(gpoly << i);
    return g;
}

namespace {


// Find the lexicographically-smallest degree-11 divisor of x^23 - 1 over GF(2)
// other than trivial factors. x^23-1 = (x-1) g1 g2 with deg g1 = deg g2 = 11.
uint64_t golay_generator_poly() {
    const uint64_t target = (uint64_t(1) << 23) | 1;   // x^23 + 1
    for (uint64_t cand = (uint64_t(1) << 11) | 1; cand < (uint64_t(1) << 12); cand += 2) {
        // long division of target by cand
        uint64_t rem = target;
        while (true) {
            int dr = 63 - std::countl_zero(rem);
            if (rem == 0 || dr < 11) break;
            rem ^= cand << (dr - 11);
        }
        if (rem == 0) return cand;
    }
    throw std::runtime_error("golay_generator_poly: factor not found");
}

}  // namespace

GeneratorMatrix golay_23_12() {
    return cyclic_code(23, golay_generator_poly(), 11);
}

GeneratorMatrix golay_dual_23_11() {
    return golay_23_12().dual();
}

GeneratorMatrix extended_golay_24_12() {
    GeneratorMatrix g = golay_23_12();
    GeneratorMatrix e;
    e.n = 24; e.k = 12;
    for (uint64_t r : g.rows) {
        uint64_t row = r;
        if (std::popcount(r) % 2 != 0) row |= uint64_t(1) << 23;
        e.rows.push_back(row);
    }
    return e;
}

Code nordstrom_robinson() {
    // The octacode: self-dual Z4 code of length 8, Lee distance 6. Its
    // generator is g(x) x^j for the Z4 (Hensel) lift g of x^3 + x + 1
    // dividing x^7 - 1 over Z4, extended by an overall Z4 parity digit.
    // Find the lift by brute force over cubic lifts.
    auto z4_polymul_mod = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % 4;
        return r;
    };
    std::vector<int> lift;
    for (int c0 = 0; c0 < 4 && lift.empty(); ++c0)
        for (int c1 = 0; c1 < 4 && lift.empty(); ++c1)
            for (int c2 = 0; c2 < 4 && lift.empty(); ++c2) {
                if (c0 % 2 != 1 || c1 % 2 != 1 || c2 % 2 != 0) continue;   // reduces to 1 + x mod 2
                std::vector<int> g = {c0, c1, c2, 1};
                // need a quartic cofactor h with g*h = x^7 - 1 (mod 4): try all h lifts of the
                // binary cofactor (x^7-1)/(x-1)(x^3+x+1) ... brute force over quartics with h3.. free
                for (int h0 = 0; h0 < 4; ++h0)
                    for (int h1 = 0; h1 < 4; ++h1)
                        for (int h2 = 0; h2 < 4; ++h2)
                            for (int h3 = 0; h3 < 4; ++h3) {
                                std::vector<int> h = {h0, h1, h2, h3, 1};
                                std::vector<int> p = z4_polymul_mod(g, h);
                                // want x^7 + 3 (i.e. x^7 - 1 mod 4)
                                bool ok = p.size() == 8 && p[7] == 1 && p[0] == 3;
                                for (size_t i = 1; ok && i < 7; ++i) ok = p[i] == 0;
                                if (ok) { lift = g; goto found; }
                            }
            found:;
            }
    if (lift.empty()) throw std::runtime_error("nordstrom_robinson: octacode lift not found");

    // generator rows over Z4: g, xg, x^2 g, x^3 g in 7 coordinates + parity digit
    std::vector<std::array<int, 8>> gen;
    for (int sh = 0; sh < 4; ++sh) {
        std::array<int, 8> row{};
        for (int i = 0; i < 4; ++i) row[(i + sh) % 7] = (row[(i + sh) % 7] + lift[i]) % 4;
        int s = 0;
        for (int i = 0; i < 7; ++i) s += row[i];
        row[7] = (4 - s % 4) % 4;
        gen.push_back(row);
    }

    // span over Z4 (4^4 = 256 words), then Gray map 0->00 1->01 2->11 3->10
    static const int gray_hi[4] = {0, 0, 1, 1};
    static const int gray_lo[4] = {0, 1, 1, 0};
    std::vector<uint64_t> words;
    for (int m = 0; m < 256; ++m) {
        std::array<int, 8> v{};
        int mm = m;
        for (int r = 0; r < 4; ++r) {
            int c = mm % 4;
            mm /= 4;
            for (int i = 0; i < 8; ++i) v[i] = (v[i] + c * gen[r][i]) % 4;
        }
        uint64_t w = 0;
        for (int i = 0; i < 8; ++i) {
            if (gray_hi[v[i]]) w |= uint64_t(1) << (2 * i);
            if (gray_lo[v[i]]) w |= uint64_t(1) << (2 * i + 1);
        }
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() != 256) throw std::runtime_error("nordstrom_robinson: span size wrong");
    return Code(16, std::move(words));
}

}  // namespace bwc
