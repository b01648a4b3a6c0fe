#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bwc {

// A binary word of length n (1 <= n <= 64), bits packed in a single machine
// word. Bit i (LSB) is position i; positions >= n are guaranteed zero.
struct BinaryWord {
    int n = 0;
    uint64_t bits = 0;

    BinaryWord() = default;
    BinaryWord(int len, uint64_t b);

    // Parse "0110..." (most significant position first, as in code files).
    static BinaryWord from_string(const std::string& s);
    std::string to_string() const;

    uint64_t mask() const { return n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1); }
    BinaryWord complemented() const { return BinaryWord(n, ~bits & mask()); }

    bool operator==(const BinaryWord&) const = default;
    auto operator<=>(const BinaryWord&) const = default;
};

int weight(const BinaryWord& x);
int hamming_distance(const BinaryWord& x, const BinaryWord& y);

// A finite set of distinct words of common length.
struct Code {
    int n = 0;
    std::vector<uint64_t> words;   // sorted, unique

    Code() = default;
    Code(int len, std::vector<uint64_t> ws);

    size_t size() const { return words.size(); }
    bool contains(uint64_t w) const;
    Code complemented() const;
    Code translated(uint64_t t) const;
};

// Minimum pairwise distance; n+1 (sentinel, "unconstrained") for |C| <= 1.
int min_distance(const Code& c);
int min_weight(const Code& c);
int max_weight(const Code& c);

// Plain-text code files: first line "n=<int>", then one word per line.
Code load_code(const std::string& path);
void save_code(const Code& c, const std::string& path);

}  // namespace bwc
