#include "bwc/word.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>

namespace bwc {

BinaryWord::BinaryWord(int len, uint64_t b) : n(len), bits(b) {
    if (n < 1 || n > 64) throw std::invalid_argument("BinaryWord: length must be in [1,64]");
    if ((bits & ~mask()) != 0) throw std::invalid_argument("BinaryWord: bits above position n-1");
}

BinaryWord BinaryWord::from_string(const std::string& s) {
    if (s.empty() || s.size() > 64) throw std::invalid_argument("BinaryWord: bad string length");
    uint64_t b = 0;
    int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i) {
        char c = s[i];
        if (c != '0' && c != '1') throw std::invalid_argument("BinaryWord: bad character");
        if (c == '1') b |= uint64_t(1) << (n - 1 - i);
    }
    return BinaryWord(n, b);
}

std::string BinaryWord::to_string() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> (n - 1 - i)) & 1) s[i] = '1';
    return s;
}

int weight(const BinaryWord& x) { return std::popcount(x.bits); }

int hamming_distance(const BinaryWord& x, const BinaryWord& y) {
    if (x.n != y.n) throw std::invalid_argument("hamming_distance: length mismatch");
    return std::popcount(x.bits ^ y.bits);
}

Code::Code(int len, std::vector<uint64_t> ws) : n(len), words(std::move(ws)) {
    if (n < 1 || n > 64) throw std::invalid_argument("Code: length must be in [1,64]");
    uint64_t mask = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    for (uint64_t w : words)
        if (w & ~mask) throw std::invalid_argument("Code: word exceeds length");
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
        throw std::invalid_argument("Code: duplicate words");
}

bool Code::contains(uint64_t w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

Code Code::complemented() const {
    uint64_t mask = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    std::vector<uint64_t> ws;
    ws.reserve(words.size());
    for (uint64_t w : words) ws.push_back(~w & mask);
    return Code(n, std::move(ws));
}

Code Code::translated(uint64_t t) const {
    std::vector<uint64_t> ws;
    ws.reserve(words.size());
    for (uint64_t w : words) ws.push_back(w ^ t);
    return Code(n, std::move(ws));
}

int min_distance(const Code& c) {
    if (c.size() <= 1) return c.n + 1;
    int best = c.n + 1;
    for (size_t i = 0; i < c.words.size(); ++i)
        for (size_t j = i + 1; j < c.words.size(); ++j)
            best = std::min(best, std::popcount(c.words[i] ^ c.words[j]));
    return best;
}

int min_weight(const Code& c) {
    int best = c.n + 1;
    for (uint64_t w : c.words) best = std::min(best, std::popcount(w));
    return c.words.empty() ? 0 : best;
}

int max_weight(const Code& c) {
    int best = 0;
    for (uint64_t w : c.words) best = std::max(best, std::popcount(w));
    return best;
}

Code load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_code: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
        throw std::runtime_error("load_code: missing n= header in " + path);
    int n = std::stoi(line.substr(2));
    std::vector<uint64_t> ws;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        BinaryWord w = BinaryWord::from_string(line);
        if (w.n != n) throw std::runtime_error("load_code: word length mismatch in " + path);
        ws.push_back(w.bits);
    }
    return Code(n, std::move(ws));
}

void save_code(const Code& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_code: cannot open " + path);
    out << "n=" << c.n << "\n";
    for (uint64_t w : c.words) out << BinaryWord(c.n, w).to_string() << "\n";
}

}  // namespace bwc
