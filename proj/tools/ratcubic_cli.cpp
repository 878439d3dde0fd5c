// Command line front end: invariants of one map, classification, conjugation,
// database generation, stats, and the feature-comparison experiment.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <thread>

#include "ratcubic/dataset.hpp"
#include "ratcubic/ml.hpp"

using namespace ratcubic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<Rat, 8> parse_coeffs(const std::string& csv, const std::string& order) {
    std::array<Rat, 8> c;
    std::stringstream ss(csv);
    std::string tok;
    int n = 0;
    while (std::getline(ss, tok, ',')) {
        if (n >= 8) throw ValidationError("expected 8 coefficients");
        c[n++] = parse_rat(tok);
    }
    if (n != 8) throw ValidationError("expected 8 coefficients, got " + std::to_string(n));
    if (order == "asc") {  // constant-first reading: reverse each block
        std::swap(c[0], c[3]);
        std::swap(c[1], c[2]);
        std::swap(c[4], c[7]);
        std::swap(c[5], c[6]);
    } else if (order != "desc") {
        throw ValidationError("--order must be desc or asc");
    }
    return c;
}

RationalMap3 map_from(const std::array<Rat, 8>& c) {
    try {
        return RationalMap3::validated(c);
    } catch (const NotARationalMap&) {
        throw ValidationError("not a degree-3 rational map (I6 = 0)");
    }
}

json invariants_json(const RationalMap3& m) {
    const XiTuple x = xi_explicit(m);
    const Rat i6 = i6_resultant(m);
    json j;
    j["schema"] = 1;
    std::vector<std::string> coeffs;
    for (const auto& v : m.coeffs()) coeffs.push_back(to_string(v));
    j["coeffs"] = coeffs;
    std::vector<std::string> xs;
    for (const auto& v : x.xi) xs.push_back(to_string(v));
    j["xi"] = xs;
    const WeightedPoint p = normalize_weighted(x);
    std::vector<std::string> ns;
    for (const auto& v : p.coords) ns.push_back(to_string(v));
    j["xi_norm"] = ns;
    j["wheight"] = weighted_height(x.xi);
    j["i6"] = to_string(i6);
    j["j6"] = to_string(j6_from_xi(x));
    j["aut"] = to_string(classify(x, i6));
    const auto a = absolute_invariants(x, i6);
    std::vector<std::string> as;
    for (const auto& v : a.i) as.push_back(to_string(v));
    j["abs"] = as;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, automorphism classification and database "
                 "tooling for degree-3 rational maps"};
    app.require_subcommand(1);

    std::string coeffs_csv, order = "desc", sigma_csv, out_path, features = "invariants";
    std::string weighted = "on";
    bool as_json = false;
    int height = 1, workers = 1, trees = 100;
    bool no_dedupe = false, with_csv = false;
    std::uint64_t seed = 42;
    double test_fraction = 0.10;

    auto add_coeffs = [&](CLI::App* cmd) {
        cmd->add_option("--coeffs", coeffs_csv,
                        "8 comma-separated rational coefficients, z^3 coefficient first")
            ->required();
        cmd->add_option("--order", order,
                        "coefficient order: desc (database order, default) or asc");
    };

    auto* inv = app.add_subcommand("invariants", "print the invariant record of one map");
    add_coeffs(inv);
    inv->add_flag("--json", as_json, "JSON output (default for this command)");

    auto* cls = app.add_subcommand("classify", "print the automorphism class label");
    add_coeffs(cls);
    cls->add_flag("--json", as_json, "JSON output");

    auto* conj = app.add_subcommand("conjugate", "conjugate a map by a Mobius matrix");
    add_coeffs(conj);
    conj->add_option("--sigma", sigma_csv, "matrix entries a,b,c,e")->required();
    conj->add_flag("--json", as_json, "JSON output");

    auto* gen = app.add_subcommand("generate", "enumerate the database up to a height bound");
    gen->add_option("--height", height, "naive height bound")->required();
    gen->add_flag("--no-dedupe-antipodal", no_dedupe,
                  "count both antipodal representatives of every tuple");
    gen->add_option("--dedupe-antipodal", [&](const std::vector<std::string>& v) {
        if (v.empty()) return true;
        no_dedupe = (v[0] == "false" || v[0] == "off" || v[0] == "0");
        return true;
    }, "explicitly set antipodal dedup (true/false)");
    gen->add_option("--workers", workers, "worker thread count");
    gen->add_option("--out", out_path, "output JSONL path");
    gen->add_flag("--csv", with_csv, "also write a CSV sidecar next to --out");

    auto* st = app.add_subcommand("stats", "distribution table of an existing JSONL database");
    st->add_option("--in", out_path, "JSONL path")->required();
    st->add_flag("--json", as_json, "JSON output");

    auto* ml = app.add_subcommand("ml", "train/evaluate the forest on a JSONL database");
    ml->add_option("--in", out_path, "JSONL path")->required();
    ml->add_option("--features", features, "coeffs | invariants");
    ml->add_option("--trees", trees, "number of trees");
    ml->add_option("--seed", seed, "random seed");
    ml->add_option("--test-fraction", test_fraction, "test split fraction");
    ml->add_option("--weighted", weighted, "class weighting: on | off");
    ml->add_flag("--json", as_json, "JSON metrics output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) {
            const RationalMap3 m = map_from(parse_coeffs(coeffs_csv, order));
            std::cout << invariants_json(m).dump(as_json ? -1 : 2) << "\n";
        } else if (cls->parsed()) {
            const RationalMap3 m = map_from(parse_coeffs(coeffs_csv, order));
            const char* label = to_string(classify(m));
            if (as_json)
                std::cout << json{{"schema", 1}, {"aut", label}}.dump() << "\n";
            else
                std::cout << label << "\n";
        } else if (conj->parsed()) {
            const RationalMap3 m = map_from(parse_coeffs(coeffs_csv, order));
            std::stringstream ss(sigma_csv);
            std::string tok;
            std::vector<Rat> s;
            while (std::getline(ss, tok, ',')) s.push_back(parse_rat(tok));
            if (s.size() != 4) throw ValidationError("--sigma needs 4 entries a,b,c,e");
            if (s[0] * s[3] - s[1] * s[2] == 0)
                throw ValidationError("sigma is singular");
            const RationalMap3 out = conjugate_map(m, MobiusMap(s[0], s[1], s[2], s[3]));
            std::vector<std::string> cs;
            for (const auto& v : out.coeffs()) cs.push_back(to_string(v));
            if (as_json)
                std::cout << json{{"schema", 1}, {"coeffs", cs}}.dump() << "\n";
            else {
                for (size_t i = 0; i < cs.size(); ++i)
                    std::cout << cs[i] << (i + 1 < cs.size() ? "," : "\n");
            }
        } else if (gen->parsed()) {
            if (height < 1) throw ValidationError("--height must be >= 1");
            EnumerationConfig cfg;
            cfg.height_bound = height;
            cfg.dedupe_antipodal = !no_dedupe;
            cfg.worker_count = workers;
            cfg.output_path = out_path;
            // RATCUBIC_OUT_DIR supplies the directory for relative outputs
            if (!out_path.empty() && out_path.front() != '/') {
                if (const char* dir = std::getenv("RATCUBIC_OUT_DIR"))
                    cfg.output_path = std::string(dir) + "/" + out_path;
            }
            out_path = cfg.output_path;
            const DatasetStats s = generate(cfg);
            std::cout << s.render();
            if (!out_path.empty()) {
                if (with_csv) {
                    convert_jsonl_to_csv(out_path, out_path + ".csv");
                    std::cerr << "wrote " << out_path << " and " << out_path << ".csv\n";
                } else {
                    std::cerr << "wrote " << out_path << "\n";
                }
            }
        } else if (st->parsed()) {
            const DatasetStats s = stats(read_jsonl(out_path));
            std::cout << s.render();
        } else if (ml->parsed()) {
            const auto records = read_jsonl(out_path);
            if (records.empty()) throw ValidationError("empty database");
            const FeatureMode mode = features == "coeffs" ? FeatureMode::Coefficients
                                   : features == "invariants"
                                       ? FeatureMode::Invariants
                                       : throw ValidationError("--features must be coeffs or invariants");
            const FeatureMatrix m = featurize(records, mode);
            auto [train, test] = stratified_split(m, test_fraction, seed);
            std::map<int, double> w;
            if (weighted == "on") {
                w = class_weights(train.y);
            } else if (weighted == "off") {
                for (int y : train.y) w[y] = 1.0;
            } else {
                throw ValidationError("--weighted must be on or off");
            }
            RandomForest rf;
            ForestConfig cfg;
            cfg.tree_count = trees;
            cfg.seed = seed;
            cfg.threads = static_cast<int>(std::thread::hardware_concurrency());
            rf.train(train, cfg, w);
            const ClassMetrics cm = evaluate(rf, test);
            std::cout << (as_json ? cm.to_json() + "\n" : cm.render());
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
