#pragma once

#include "bwc/bigint.hpp"
#include "bwc/word.hpp"

#include <string>
#include <vector>

namespace bwc {

// Weight distribution A_0..A_n of a code.
struct WeightEnumerator {
    int n = 0;
    std::vector<BigInt> coeffs;        // size n+1, all >= 0
    std::string name;
    std::string source;

    WeightEnumerator() = default;
    WeightEnumerator(int len, std::vector<BigInt> cs);

    BigInt code_size() const;
    static WeightEnumerator of_code(const Code& c);
};

enum class SumDirection { AtMost, AtLeast };

BigInt enumerator_partial_sum(const WeightEnumerator& w, int wt, SumDirection dir);

// MacWilliams transform: dual distribution W'(x,y) = W(x+y, x-y) / code_size.
// Throws if any resulting coefficient is negative or non-integral (input was
// not the distribution of a linear code of the stated size).
WeightEnumerator macwilliams_transform(const WeightEnumerator& w, const BigInt& code_size);

// JSON file form: {"n": int, "coeffs": [...], "name": str, "source": str}
WeightEnumerator load_enumerator(const std::string& path);
void save_enumerator(const WeightEnumerator& w, const std::string& path);

}  // namespace bwc
