#include "bwc/assets.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#ifndef BWC_SOURCE_ASSETS_DIR
#define BWC_SOURCE_ASSETS_DIR "assets"
#endif

namespace bwc {

namespace {
std::mutex g_mutex;
std::string g_override;
}

std::string assets_dir() {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_override.empty()) return g_override;
    if (const char* env = std::getenv("BWC_ASSETS"); env && *env) return env;
    return BWC_SOURCE_ASSETS_DIR;
}

void set_assets_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_override = dir;
}

Code CodeAsset::load() const {
    std::string path = assets_dir() + "/" + file;
    if (format == "wordlist") return load_code(path);
    if (format == "generator") return load_generator(path).span();
    throw std::runtime_error("CodeAsset: unknown format '" + format + "' for " + name);
}

std::vector<CodeAsset> load_code_manifest() {
    std::string path = assets_dir() + "/codes/manifest.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_code_manifest: cannot open " + path);
    nlohmann::json j;
    in >> j;
    std::vector<CodeAsset> out;
    for (const auto& e : j.at("codes")) {
        CodeAsset a;
        a.name = e.at("name").get<std::string>();
        a.file = e.at("file").get<std::string>();
        a.format = e.at("format").get<std::string>();
        const auto& c = e.at("claims");
        a.claims.n = c.at("n").get<int>();
        a.claims.size = c.at("size").get<long long>();
        a.claims.min_distance = c.at("min_distance").get<int>();
        a.claims.min_weight = c.value("min_weight", -1);
        a.claims.enumerator_file = c.value("enumerator", "");
        out.push_back(std::move(a));
    }
    return out;
}

CodeAsset find_code_asset(const std::string& name) {
    for (auto& a : load_code_manifest())
        if (a.name == name) return a;
    throw std::runtime_error("find_code_asset: no asset named " + name);
}

WeightEnumerator load_asset_enumerator(const std::string& relative_path) {
    return load_enumerator(assets_dir() + "/" + relative_path);
}

}  // namespace bwc
