#pragma once

#include "bwc/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bwc {

// Generator matrix over GF(2): k rows of length n, bit i = position i.
struct GeneratorMatrix {
    int n = 0;
    int k = 0;
    std::vector<uint64_t> rows;

    Code span() const;                  // all 2^k codewords (k <= 24 guarded)
    GeneratorMatrix dual() const;       // nullspace basis, (n-k) x n
};

// Text format: first line "n=<n> k=<k>", then k rows as 0/1 strings.
GeneratorMatrix load_generator(const std::string& path);
void save_generator(const GeneratorMatrix& g, const std::string& path);

// Standard small codes used by the shipped assets.
GeneratorMatrix hamming_7_4();
GeneratorMatrix simplex_7_3();
GeneratorMatrix reed_muller(int r, int m);    // RM(r,m), length 2^m

// Binary cyclic code of length n with generator polynomial g (bit i = coeff of x^i).
GeneratorMatrix cyclic_code(int n, uint64_t gpoly, int deg);

// Golay family, built from the degree-11 factors of x^23 - 1.
GeneratorMatrix golay_23_12();
GeneratorMatrix golay_dual_23_11();
GeneratorMatrix extended_golay_24_12();

// Nordstrom-Robinson (16, 256, 6): Gray image of the length-8 octacode over Z4.
Code nordstrom_robinson();

}  // namespace bwc
