// pbun: command-line front end for Hecke graphs, the neighbor oracle,
// eigenforms, cusp checks and toroidal checks on PBun_3 of the projective line.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pbun/eigenform.hpp"
#include "pbun/error.hpp"
#include "pbun/extensions.hpp"
#include "pbun/hecke.hpp"
#include "pbun/oracle.hpp"
#include "pbun/toroidal.hpp"

namespace fs = std::filesystem;
using pbun::Rational;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    std::int64_t q0 = 2;
    int bound = 4;
    int r = 1;
    std::string lambda;
    std::string f0 = "1";
    std::uint64_t seed = 1;
    int samples = 0;
    std::string out;
    std::string format = "json";
    unsigned jobs = 1;
    std::vector<std::uint32_t> primes;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

pbun::EigenPair parse_lambda(const std::string& text) {
    const auto comma = text.find(',');
    require(comma != std::string::npos, "--lambda: expected two rationals 'a,b'");
    try {
        return {pbun::parse_rational(text.substr(0, comma)), pbun::parse_rational(text.substr(comma + 1))};
    } catch (const pbun::Error& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
}

nlohmann::ordered_json with_meta(nlohmann::ordered_json payload) {
    payload["meta"] = {{"tool", "pbun"}, {"version", kVersion}};
    return payload;
}

fs::path resolve_out(const std::string& out) {
    fs::path p(out);
    if (const char* dir = std::getenv("PBUN_OUT_DIR"); dir && *dir && p.is_relative()) p = fs::path(dir) / p;
    return p;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    const fs::path path = resolve_out(cfg.out);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw pbun::Error("cannot write " + path.string());
    os << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void validate_common(const RunConfig& cfg) {
    require(pbun::is_prime_power(cfg.q0), "--q0: not a prime power: " + std::to_string(cfg.q0));
    require(cfg.bound >= 1, "--D: must be at least 1");
    require(cfg.jobs >= 1, "--jobs: must be at least 1");
}

int run_graph(const RunConfig& cfg) {
    require(cfg.r >= 1 && cfg.r <= 3, "--r: must be 1, 2 or 3");
    require(cfg.bound >= 1, "--D: must be at least 1");
    const auto g = pbun::hecke::build_graph(cfg.r, cfg.bound, cfg.jobs);
    if (cfg.format == "dot") {
        emit(cfg, pbun::hecke::to_dot(g));
    } else if (cfg.format == "csv") {
        emit(cfg, pbun::hecke::to_csv(g));
    } else {
        emit(cfg, dump(with_meta(pbun::hecke::to_json(g))));
    }
    return kOk;
}

int run_oracle_verify(RunConfig cfg) {
    require(cfg.format == "json", "--format: oracle-verify only writes json");
    if (cfg.primes.empty()) cfg.primes.push_back(static_cast<std::uint32_t>(cfg.q0));
    for (auto p : cfg.primes) require(pbun::is_prime(p), "--q0: oracle needs prime field sizes, got " + std::to_string(p));
    require(cfg.bound >= 1, "--D: must be at least 1");
    const auto report = pbun::oracle::verify_rules(cfg.bound, cfg.primes, cfg.jobs);
    emit(cfg, dump(with_meta(pbun::oracle::to_json(report))));
    return report.ok() ? kOk : kMismatch;
}

int run_eigenform(const RunConfig& cfg) {
    validate_common(cfg);
    require(!cfg.lambda.empty(), "--lambda: required");
    const auto pair = parse_lambda(cfg.lambda);
    Rational f0;
    try {
        f0 = pbun::parse_rational(cfg.f0);
    } catch (const pbun::Error& e) {
        throw UsageError(std::string("--f0: ") + e.what());
    }
    const auto table = pbun::eigen::solve_eigenform(pair, cfg.q0, cfg.bound, f0);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "type,value\n";
        for (const auto& [type, value] : table.values) os << '"' << type << "\"," << pbun::to_string(value) << '\n';
        emit(cfg, os.str());
    } else {
        require(cfg.format == "json", "--format: eigenform writes json or csv");
        emit(cfg, dump(with_meta(pbun::to_json(table))));
    }
    const auto report = pbun::eigen::verify_hecke_relations(table, pair);
    if (!report.ok()) {
        std::cerr << dump(pbun::eigen::to_json(report));
        return kMismatch;
    }
    return kOk;
}

int run_cusp_check(const RunConfig& cfg) {
    validate_common(cfg);
    require(pbun::is_prime(cfg.q0), "--q0: cusp-check needs a prime field size");
    require(cfg.format == "json", "--format: cusp-check only writes json");
    const auto dim = pbun::ext::cusp_space_dimension(cfg.bound, static_cast<std::uint32_t>(cfg.q0), cfg.jobs);
    nlohmann::ordered_json j;
    j["q0"] = cfg.q0;
    j["bound"] = cfg.bound;
    j["cusp_dimension"] = dim;
    emit(cfg, dump(with_meta(j)));
    return dim == 0 ? kOk : kMismatch;
}

int run_toroidal_check(const RunConfig& cfg) {
    validate_common(cfg);
    require(cfg.format == "json", "--format: toroidal-check only writes json");
    std::vector<pbun::EigenPair> pairs;
    if (!cfg.lambda.empty()) pairs.push_back(parse_lambda(cfg.lambda));
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < cfg.samples; ++i) {
        const long n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng);
        pairs.push_back({Rational(n1, d1), Rational(n2, d2)});
        pairs.back().lambda1.canonicalize();
        pairs.back().lambda2.canonicalize();
    }
    require(!pairs.empty(), "--lambda or --samples: nothing to check");

    bool all_trivial = true;
    auto results = nlohmann::ordered_json::array();
    for (const auto& pair : pairs) {
        const auto verdict = pbun::toroidal::toroidal_eigen_intersection(pair, cfg.q0, cfg.bound);
        all_trivial = all_trivial && verdict.trivial_intersection;
        auto j = pbun::toroidal::to_json(verdict);
        j["lambda"] = {pbun::to_string(pair.lambda1), pbun::to_string(pair.lambda2)};
        results.push_back(std::move(j));
    }
    nlohmann::ordered_json j;
    j["q0"] = cfg.q0;
    j["bound"] = cfg.bound;
    j["results"] = std::move(results);
    emit(cfg, dump(with_meta(j)));
    return all_trivial ? kOk : kMismatch;
}

// Frozen regression tables: the lambda = 0 eigenform and the oracle counts.
std::map<std::string, std::string> golden_payloads() {
    std::map<std::string, std::string> files;
    const pbun::EigenPair zero{Rational(0), Rational(0)};
    files["eigenform_lambda0_q2_D6.json"] = dump(pbun::to_json(pbun::eigen::solve_by_elimination(zero, 2, 6, Rational(1))));
    for (std::uint32_t q0 : {2u, 3u}) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : pbun::bundles::enumerate_pbun(3, 6)) {
            for (int r : {1, 2}) {
                const auto nc = pbun::oracle::neighbor_oracle(v, r, q0);
                nlohmann::ordered_json e;
                e["vertex"] = v.gaps();
                e["r"] = r;
                auto counts = nlohmann::ordered_json::array();
                for (const auto& [type, count] : nc.counts) counts.push_back({{"type", type.gaps()}, {"count", count}});
                e["counts"] = std::move(counts);
                arr.push_back(std::move(e));
            }
        }
        files["oracle_counts_q" + std::to_string(q0) + "_D6.json"] = dump(arr);
    }
    return files;
}

int run_golden(const std::string& dir, bool regenerate) {
    int status = kOk;
    for (const auto& [name, text] : golden_payloads()) {
        const fs::path path = fs::path(dir) / name;
        if (regenerate) {
            fs::create_directories(path.parent_path());
            std::ofstream(path, std::ios::binary) << text;
            std::cout << "wrote " << path.string() << '\n';
            continue;
        }
        std::ifstream is(path, std::ios::binary);
        if (!is) {
            std::cout << "MISSING " << name << '\n';
            status = kMismatch;
            continue;
        }
        std::stringstream ss;
        ss << is.rdbuf();
        const bool same = ss.str() == text;
        std::cout << (same ? "same    " : "DIFFERS ") << name << '\n';
        if (!same) status = kMismatch;
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke graphs, eigenforms, cusp and toroidal checks for PGL_3 over the projective line"};
    app.set_version_flag("--version", kVersion);
    RunConfig cfg;
    std::string golden_dir;
    bool regenerate = false;
    app.add_option("--golden", golden_dir, "Re-derive the frozen regression tables and diff them against DIR");
    app.add_flag("--regenerate", regenerate, "With --golden: overwrite the files instead of diffing");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--D", cfg.bound, "Truncation bound on the gaps")->capture_default_str();
        sub->add_option("--out", cfg.out, "Output path (default stdout); PBUN_OUT_DIR prefixes relative paths");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv"}));
        sub->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Seed for randomized batches")->capture_default_str();
    };

    auto* graph = app.add_subcommand("graph", "Hecke graph of Phi_{x,r}");
    add_common(graph);
    graph->add_option("--r", cfg.r, "Operator index 1, 2 or 3")->capture_default_str();

    auto* verify = app.add_subcommand("oracle-verify", "Compare brute-force neighbor counts with the closed-form tables");
    add_common(verify);
    verify->add_option("--q0", cfg.primes, "Prime field sizes")->delimiter(',');

    auto* eigenform = app.add_subcommand("eigenform", "Solve and verify the eigenform for (lambda1, lambda2)");
    add_common(eigenform);
    eigenform->add_option("--q0", cfg.q0, "Field size (prime power)")->capture_default_str();
    eigenform->add_option("--lambda", cfg.lambda, "Eigenvalues as 'a,b' with a, b integers or p/q");
    eigenform->add_option("--f0", cfg.f0, "Value at the trivial class")->capture_default_str();

    auto* cusp = app.add_subcommand("cusp-check", "Dimension of the truncated cusp space");
    add_common(cusp);
    cusp->add_option("--q0", cfg.q0, "Prime field size")->capture_default_str();

    auto* toroidal = app.add_subcommand("toroidal-check", "Toroidal sums of eigenforms and the intersection verdict");
    add_common(toroidal);
    toroidal->add_option("--q0", cfg.q0, "Field size (prime power)")->capture_default_str();
    toroidal->add_option("--lambda", cfg.lambda, "Eigenvalues as 'a,b'");
    toroidal->add_option("--samples", cfg.samples, "Additional random eigenvalue pairs")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (!golden_dir.empty()) return run_golden(golden_dir, regenerate);
        if (graph->parsed()) return run_graph(cfg);
        if (verify->parsed()) return run_oracle_verify(cfg);
        if (eigenform->parsed()) return run_eigenform(cfg);
        if (cusp->parsed()) return run_cusp_check(cfg);
        if (toroidal->parsed()) return run_toroidal_check(cfg);
        std::cerr << app.help();
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const pbun::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
