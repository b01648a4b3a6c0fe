// Regenerates the shipped asset files (code word lists / generator matrices
// and their weight distributions) into a target directory. The knowns table
// is hand-maintained; everything constructible is rebuilt from scratch here
// so CI can diff it against the committed files.

#include "bwc/assets.hpp"
#include "bwc/enumerator.hpp"
#include "bwc/linear_code.hpp"
#include "bwc/word.hpp"

#include <cstdio>
#include <fstream>
#include <filesystem>
#include <iostream>
#include <string>

#include <json.hpp>

using namespace bwc;

namespace {

nlohmann::json code_entry(const std::string& name, const std::string& file, const std::string& format,
                          const Code& code, const std::string& enum_file) {
    nlohmann::json e;
    e["name"] = name;
    e["file"] = file;
    e["format"] = format;
    e["claims"]["n"] = code.n;
    e["claims"]["size"] = static_cast<long long>(code.size());
    e["claims"]["min_distance"] = min_distance(code);
    e["claims"]["min_weight"] = min_weight(code);
    if (!enum_file.empty()) e["claims"]["enumerator"] = enum_file;
    return e;
}

void write_enum(const Code& code, const std::string& name, const std::string& source, const std::string& path) {
    WeightEnumerator w = WeightEnumerator::of_code(code);
    w.name = name;
    w.source = source;
    save_enumerator(w, path);
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "assets";
    namespace fs = std::filesystem;
    fs::create_directories(dir + "/codes");
    fs::create_directories(dir + "/enumerators");

    nlohmann::json manifest;
    manifest["codes"] = nlohmann::json::array();

    auto emit_generator = [&](const std::string& name, const GeneratorMatrix& g, const std::string& source) {
        std::string file = "codes/" + name + ".gen";
        std::string efile = "enumerators/" + name + ".json";
        save_generator(g, dir + "/" + file);
        Code c = g.span();
        write_enum(c, name, source, dir + "/" + efile);
        manifest["codes"].push_back(code_entry(name, file, "generator", c, efile));
        std::cout << name << ": n=" << c.n << " size=" << c.size() << " d=" << min_distance(c) << "\n";
    };

    emit_generator("hamming-7-4", hamming_7_4(), "Hamming [7,4,3]");
    emit_generator("simplex-7-3", simplex_7_3(), "simplex [7,3,4], dual of Hamming [7,4]");
    emit_generator("rm-1-4", reed_muller(1, 4), "first-order Reed-Muller [16,5,8]");
    emit_generator("rm-2-4", reed_muller(2, 4), "second-order Reed-Muller [16,11,4]");
    emit_generator("golay-23-12", golay_23_12(), "binary Golay [23,12,7], cyclic");
    emit_generator("golay-dual-23-11", golay_dual_23_11(), "dual of the binary Golay code [23,11,8]");
    emit_generator("ext-golay-24-12", extended_golay_24_12(), "extended binary Golay [24,12,8]");

    {
        Code nr = nordstrom_robinson();
        std::string file = "codes/nordstrom-robinson-16.code";
        std::string efile = "enumerators/nordstrom-robinson-16.json";
        save_code(nr, dir + "/" + file);
        write_enum(nr, "nordstrom-robinson-16", "Gray image of the length-8 octacode over Z4", dir + "/" + efile);
        manifest["codes"].push_back(code_entry("nordstrom-robinson-16", file, "wordlist", nr, efile));
        std::cout << "nordstrom-robinson-16: n=" << nr.n << " size=" << nr.size()
                  << " d=" << min_distance(nr) << "\n";
    }

    std::ofstream mf(dir + "/codes/manifest.json");
    mf << manifest.dump(2) << "\n";
    std::cout << "manifest written to " << dir << "/codes/manifest.json\n";
    return 0;
}
