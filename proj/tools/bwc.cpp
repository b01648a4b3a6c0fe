// Command-line front end: bound queries, table regeneration, SDP bounds and
// export, exact search, asymptotics, translation, and asset verification.

#include "bwc/asympt.hpp"
#include "bwc/assets.hpp"
#include "bwc/bounds.hpp"
#include "bwc/exact.hpp"
#include "bwc/sdp_build.hpp"
#include "bwc/tablegen.hpp"
#include "bwc/zonal.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

using namespace bwc;
using nlohmann::json;

namespace {

struct GlobalConfig {
    std::string assets;
    std::string config_file;
    double tol = 1e-8;
    double budget = 60.0;
    bool asymptotic_rules = false;
    int selfdual_threshold = 30;
    bool verbose = false;
};

// precedence: explicit flags > config file > defaults
void apply_config_file(GlobalConfig& g, const CLI::App& app) {
    if (g.config_file.empty()) return;
    std::ifstream in(g.config_file);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + g.config_file);
    json j;
    in >> j;
    auto flag_given = [&](const std::string& name) {
        auto* opt = app.get_option_no_throw(name);
        return opt && opt->count() > 0;
    };
    if (!flag_given("--assets") && j.contains("assets")) g.assets = j["assets"].get<std::string>();
    if (!flag_given("--tol") && j.contains("tol")) g.tol = j["tol"].get<double>();
    if (!flag_given("--budget") && j.contains("budget")) g.budget = j["budget"].get<double>();
    if (!flag_given("--asymptotic-rules") && j.contains("asymptotic_rules"))
        g.asymptotic_rules = j["asymptotic_rules"].get<bool>();
    if (j.contains("selfdual_threshold")) g.selfdual_threshold = j["selfdual_threshold"].get<int>();
}

json interval_json(const BoundInterval& iv) {
    json j;
    j["lower"] = iv.lower.fits_int64() ? json(iv.lower.to_int64()) : json(iv.lower.to_string());
    j["upper"] = iv.upper.fits_int64() ? json(iv.upper.to_int64()) : json(iv.upper.to_string());
    j["lower_rule"] = iv.lower_provenance;
    j["upper_rule"] = iv.upper_provenance;
    return j;
}

json report_json(const SolveReport& rep, const std::string& method, double tol) {
    json j;
    j["method"] = method;
    j["tolerance"] = tol;
    j["converged"] = rep.converged;
    j["iterations"] = rep.iterations;
    j["primal"] = rep.primal_value;
    j["dual"] = rep.dual_value;
    j["duality_gap"] = rep.duality_gap;
    j["max_violation"] = rep.max_violation;
    j["min_block_eig"] = rep.min_block_eig;
    j["certified_upper_bound"] = rep.certified_upper_bound;
    j["dual_correction"] = rep.dual_correction;
    j["residual_correction"] = rep.residual_correction;
    if (!rep.message.empty()) j["message"] = rep.message;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds engine for bounded-weight binary codes"};
    app.require_subcommand(1);
    GlobalConfig g;
    app.add_option("--assets", g.assets, "asset directory (overrides $BWC_ASSETS)");
    app.add_option("--config", g.config_file, "JSON config file (flags take precedence)");
    app.add_option("--tol", g.tol, "SDP tolerance");
    app.add_option("--budget", g.budget, "search budget in seconds");
    app.add_flag("--asymptotic-rules", g.asymptotic_rules, "enable rules valid only for large n");
    app.add_flag("--verbose", g.verbose, "stream progress to stderr");

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "best certified bounds for B(n,d,w) or L(n,d,w)");
    std::string b_quantity = "B", b_method, b_rules = "all";
    int b_n = 0, b_d = 0, b_w = 0;
    bool b_with_sdp = false, b_with_exact = false;
    bound->add_option("--quantity", b_quantity, "B or L")->check(CLI::IsMember({"B", "L"}));
    bound->add_option("--n", b_n)->required();
    bound->add_option("--d", b_d)->required();
    bound->add_option("--w", b_w)->required();
    bound->add_option("--rules", b_rules)->check(CLI::IsMember({"all", "elementary"}));
    bound->add_option("--method", b_method, "single closed-form bound: elias or deg2")
        ->check(CLI::IsMember({"elias", "deg2"}));
    bound->add_flag("--with-sdp", b_with_sdp, "merge the theta-prime upper bound");
    bound->add_flag("--with-exact", b_with_exact, "merge an exact-search result");

    // ---- table ----
    auto* table = app.add_subcommand("table", "regenerate one of the published tables");
    std::string t_which, t_format = "md", t_out;
    table->add_option("--which", t_which, "I..VI")->required();
    table->add_option("--format", t_format)->check(CLI::IsMember({"md", "csv", "json"}));
    table->add_option("--out", t_out, "write the document to a file instead of stdout");

    // ---- sdp ----
    auto* sdp = app.add_subcommand("sdp", "semidefinite bounds on L(n,d,w)");
    int s_n = 0, s_d = 0, s_w = 0;
    std::string s_method = "theta", s_export;
    sdp->add_option("--n", s_n)->required();
    sdp->add_option("--d", s_d)->required();
    sdp->add_option("--w", s_w)->required();
    sdp->add_option("--method", s_method)->check(CLI::IsMember({"theta", "poly1", "poly2"}));
    sdp->add_option("--export", s_export, "write the problem in SDPA sparse format");

    // ---- exact ----
    auto* exact = app.add_subcommand("exact", "exhaustive / branch-and-bound exact values");
    std::string e_quantity = "B";
    int e_n = 0, e_d = 0, e_w = 0;
    exact->add_option("--quantity", e_quantity)->check(CLI::IsMember({"B", "L", "A", "Aw"}));
    exact->add_option("--n", e_n)->required();
    exact->add_option("--d", e_d)->required();
    exact->add_option("--w", e_w);

    // ---- asym ----
    auto* asym = app.add_subcommand("asym", "exponent reduction");
    double a_delta = 0.0, a_omega = 0.0;
    std::string a_plugs = "gv-trivial";
    asym->add_option("--delta", a_delta)->required();
    asym->add_option("--omega", a_omega)->required();
    asym->add_option("--plugs", a_plugs)->check(CLI::IsMember({"gv-trivial"}));

    // ---- translate ----
    auto* translate = app.add_subcommand("translate", "weight-raising translation of a constant-weight code");
    std::string tr_code, tr_mode = "exhaustive", tr_rounding = "exact";
    int tr_w2 = 0;
    long long tr_trials = 1000;
    uint64_t tr_seed = 1;
    translate->add_option("--code", tr_code, "code file")->required();
    translate->add_option("--w2", tr_w2)->required();
    translate->add_option("--mode", tr_mode)->check(CLI::IsMember({"exhaustive", "random"}));
    translate->add_option("--trials", tr_trials);
    translate->add_option("--seed", tr_seed);
    translate->add_option("--rounding", tr_rounding)->check(CLI::IsMember({"exact", "floor"}));

    // ---- verify-assets ----
    auto* verify = app.add_subcommand("verify-assets", "recompute every shipped code asset from scratch");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        apply_config_file(g, app);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!g.assets.empty()) set_assets_dir(g.assets);

    try {
        if (bound->parsed()) {
            ProblemSpec spec{b_quantity == "B" ? BoundQuantity::B : BoundQuantity::L, b_n, b_d, b_w};
            if (!spec.valid()) {
                std::cerr << "error: constraint violation: need 1 <= d <= n and 0 <= w <= n\n";
                return 2;
            }
            if (!b_method.empty()) {
                // closed-form query on L(n,d,w) parameters
                json j;
                j["method"] = b_method;
                std::optional<Rational> v = b_method == "elias" ? elias_degree1(b_n, b_d, b_w)
                                                                : degree2_bound(b_n, b_d, b_w);
                if (v) {
                    j["applies"] = true;
                    j["rational"] = v->to_string();
                    j["bound"] = v->floor().to_int64();
                } else {
                    j["applies"] = false;
                }
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            KnownTable t = KnownTable::load_default();
            BoundOptions opts;
            opts.asymptotic_rules = g.asymptotic_rules;
            opts.selfdual_threshold = g.selfdual_threshold;
            std::vector<ExtraBound> extras;
            if (b_with_sdp && b_rules == "all") {
                extras.push_back({"theta-prime", Side::Upper, [&](int n, int d, int w) -> std::optional<BigInt> {
                                      SolveOptions so;
                                      so.tol = g.tol;
                                      so.verbose = g.verbose;
                                      // bound on B(n,d,w) through the complement
                                      SdpBoundResult r = theta_prime_bound(n, d, n - w, so);
                                      return BigInt(r.bound);
                                  }});
            }
            if (b_with_exact && b_rules == "all") {
                extras.push_back({"exact-search", Side::Upper, [&](int n, int d, int w) -> std::optional<BigInt> {
                                      SearchSpec s = SearchSpec::quantity_B(n, d, w, g.budget);
                                      ExactResult r = max_code(s);
                                      if (!r.proved_optimal) return std::nullopt;
                                      return BigInt(r.value);
                                  }});
                extras.push_back({"exact-search", Side::Lower, [&](int n, int d, int w) -> std::optional<BigInt> {
                                      SearchSpec s = SearchSpec::quantity_B(n, d, w, g.budget);
                                      ExactResult r = max_code(s);
                                      return BigInt(r.value);
                                  }});
            }
            BestBoundsResult r = best_bounds(spec, t, opts, extras);
            json j = interval_json(r.interval);
            json trace = json::array();
            for (const auto& e : r.trace) {
                json te;
                te["side"] = e.side == Side::Lower ? "lower" : "upper";
                te["rule"] = e.rule;
                te["value"] = e.value.fits_int64() ? json(e.value.to_int64()) : json(e.value.to_string());
                trace.push_back(te);
            }
            j["trace"] = trace;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (table->parsed()) {
            KnownTable t = KnownTable::load_default();
            TableOptions topt;
            topt.format = t_format == "md" ? TableFormat::Markdown
                          : t_format == "csv" ? TableFormat::Csv
                                              : TableFormat::Json;
            topt.sdp_tol = g.tol;
            topt.progress = g.verbose;
            TableResult r = run_table(parse_table_name(t_which), t, topt);
            if (t_out.empty()) {
                std::cout << r.document;
            } else {
                std::ofstream out(t_out);
                out << r.document;
            }
            return 0;
        }

        if (sdp->parsed()) {
            if (s_n < 1 || s_d < 1 || s_d > s_n || s_w < 0 || s_w > s_n) {
                std::cerr << "error: constraint violation in (n,d,w)\n";
                return 2;
            }
            SolveOptions so;
            so.tol = g.tol;
            so.verbose = g.verbose;
            if (!s_export.empty()) {
                SdpProblem prob = s_method == "theta" ? build_theta_prime_sdp(s_n, s_d, s_w)
                                                      : build_poly_sdp(s_n, s_d, s_w, s_method == "poly1" ? 1 : 2);
                std::ofstream out(s_export);
                out << export_sdpa(prob.lower());
            }
            SdpBoundResult r = s_method == "theta" ? theta_prime_bound(s_n, s_d, s_w, so)
                               : s_method == "poly1" ? poly_bound(s_n, s_d, s_w, 1, so)
                                                     : poly_bound(s_n, s_d, s_w, 2, so);
            json j = report_json(r.report, r.method, g.tol);
            j["bound"] = r.bound;
            j["quantity"] = "L(" + std::to_string(s_n) + "," + std::to_string(s_d) + "," + std::to_string(s_w) + ")";
            if (r.exact_f0) j["certified_f0"] = r.exact_f0->to_string();
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (exact->parsed()) {
            SearchSpec s;
            if (e_quantity == "B") s = SearchSpec::quantity_B(e_n, e_d, e_w, g.budget);
            else if (e_quantity == "L") s = SearchSpec::quantity_L(e_n, e_d, e_w, g.budget);
            else if (e_quantity == "A") s = SearchSpec::quantity_A(e_n, e_d, g.budget);
            else s = SearchSpec::quantity_Aw(e_n, e_d, e_w, g.budget);
            ExactResult r = max_code(s);
            json j;
            j["quantity"] = e_quantity;
            j["n"] = e_n;
            j["d"] = e_d;
            if (e_quantity != "A") j["w"] = e_w;
            j["value"] = r.value;
            j["proved_optimal"] = r.proved_optimal;
            json words = json::array();
            for (uint64_t wd : r.witness.words) words.push_back(BinaryWord(r.witness.n, wd).to_string());
            j["witness"] = words;
            std::cout << j.dump(2) << "\n";
            return r.proved_optimal ? 0 : 3;
        }

        if (asym->parsed()) {
            auto q = ExponentQuery::gv_trivial(a_delta, a_omega);
            auto [lo, hi] = b_exponent(q);
            json j;
            j["delta"] = a_delta;
            j["omega"] = a_omega;
            j["plugs"] = a_plugs;
            j["lower"] = lo;
            j["upper"] = hi;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (translate->parsed()) {
            Code c = load_code(tr_code);
            TranslateResult r = heavy_translate(
                c, tr_w2, tr_mode == "exhaustive" ? TranslateMode::Exhaustive : TranslateMode::Random,
                tr_trials, tr_seed, tr_rounding == "exact" ? RoundingMode::Exact : RoundingMode::Floor);
            json j;
            j["translate"] = r.translate.to_string();
            j["tried"] = r.tried;
            j["size"] = r.code.size();
            j["min_distance"] = min_distance(r.code);
            json words = json::array();
            for (uint64_t wd : r.code.words) words.push_back(BinaryWord(r.code.n, wd).to_string());
            j["words"] = words;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            bool ok = true;
            json j = json::array();
            for (const CodeAsset& a : load_code_manifest()) {
                AssetReport rep = verify_code_asset(a);
                json e;
                e["name"] = rep.name;
                e["ok"] = rep.ok;
                e["computed_size"] = rep.computed_size;
                e["computed_min_distance"] = rep.computed_d;
                if (!rep.failures.empty()) e["failures"] = rep.failures;
                j.push_back(e);
                ok = ok && rep.ok;
            }
            std::cout << j.dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
