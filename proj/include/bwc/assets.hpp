#pragma once

#include "bwc/enumerator.hpp"
#include "bwc/linear_code.hpp"
#include "bwc/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bwc {

// Asset directory resolution: explicit override > $BWC_ASSETS > source tree.
std::string assets_dir();
void set_assets_dir(const std::string& dir);

struct CodeAssetClaims {
    int n = 0;
    long long size = 0;
    int min_distance = 0;
    int min_weight = -1;                      // -1: unclaimed
    std::string enumerator_file;              // optional, relative to assets dir
};

struct CodeAsset {
    std::string name;
    std::string file;                         // relative to assets dir
    std::string format;                       // "generator" | "wordlist"
    CodeAssetClaims claims;

    Code load() const;                        // expands generators to word lists
};

std::vector<CodeAsset> load_code_manifest();
CodeAsset find_code_asset(const std::string& name);

WeightEnumerator load_asset_enumerator(const std::string& relative_path);

}  // namespace bwc
