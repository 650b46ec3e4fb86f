#include "rvertex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "rvertex/bethe.hpp"
#include "rvertex/detformula.hpp"
#include "rvertex/sample.hpp"
#include "rvertex/symfunc.hpp"
#include "rvertex/verify.hpp"

namespace rvertex {

namespace {

const std::map<std::string, Target>& target_tokens() {
    static const std::map<std::string, Target> m = {
        {"wavefunction", Target::kWavefunction},
        {"dual", Target::kDual},
        {"symfunc", Target::kSymfunc},
        {"dual-symfunc", Target::kDualSymfunc},
        {"dwbc-det", Target::kDwbcDet},
        {"dwbc-hom", Target::kDwbcHom},
        {"bethe-f", Target::kBetheF},
        {"lemma", Target::kLemma},
        {"properties", Target::kProperties},
        {"theorem52", Target::kTheorem52},
        {"pairing", Target::kPairing},
        {"all", Target::kAll},
    };
    return m;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& flag, const std::string& s) {
    std::vector<Rat> out;
    for (const auto& item : split_commas(s)) {
        try {
            out.push_back(parse_rat(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(flag + ": " + e.what());
        }
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

std::string join_rats(const std::vector<Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out;
}

OccupationConfig default_config(int M, int N) {
    OccupationConfig x;
    x.M = M;
    x.x.resize(N);
    std::iota(x.x.begin(), x.x.end(), 1);
    return x;
}

}  // namespace

std::string to_token(Target t) {
    for (const auto& [token, value] : target_tokens())
        if (value == t) return token;
    return "all";
}

std::string to_token(Command c) {
    switch (c) {
        case Command::kCompute: return "compute";
        case Command::kVerify: return "verify";
        case Command::kBench: return "bench";
    }
    return "verify";
}

std::string to_token(OutputFormat f) { return f == OutputFormat::kJson ? "json" : "text"; }

RunConfig parse_args(const std::vector<std::string>& argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("REFLECT_VERTEX_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("REFLECT_VERTEX_SEED: not an unsigned integer");
        }
    }

    CLI::App app{"exact reflecting-end six-vertex toolkit"};
    std::string command, target = "all", output = "json";
    std::string xs, a_str, b_str, zs, ws;
    app.add_option("command", command, "compute | verify | bench")
        ->required()
        ->check(CLI::IsMember({"compute", "verify", "bench"}));
    app.add_option("--target", target)->check(CLI::IsMember([] {
        std::vector<std::string> keys;
        for (const auto& [token, value] : target_tokens()) keys.push_back(token);
        return keys;
    }()));
    app.add_option("--M", cfg.M)->check(CLI::PositiveNumber);
    app.add_option("--N", cfg.N)->check(CLI::NonNegativeNumber);
    app.add_option("--x", xs, "comma-separated occupied positions");
    app.add_option("--seed", cfg.seed);
    app.add_option("--a", a_str);
    app.add_option("--b", b_str);
    app.add_option("--z", zs, "comma-separated fractions");
    app.add_option("--w", ws, "comma-separated fractions");
    app.add_option("--output", output)->check(CLI::IsMember({"json", "text"}));
    app.add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);

    try {
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.command = command == "compute"  ? Command::kCompute
                  : command == "verify" ? Command::kVerify
                                        : Command::kBench;
    cfg.target = target_tokens().at(target);
    cfg.output = output == "json" ? OutputFormat::kJson : OutputFormat::kText;

    if (!xs.empty()) {
        for (const auto& item : split_commas(xs)) {
            try {
                cfg.x.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw UsageError("--x: '" + item + "' is not an integer");
            }
        }
        OccupationConfig probe;
        probe.M = cfg.M;
        probe.x = cfg.x;
        if (!probe.valid())
            throw UsageError("--x: positions must be strictly increasing within 1.." +
                             std::to_string(cfg.M));
    }

    const bool any_point = !a_str.empty() || !b_str.empty() || !zs.empty() || !ws.empty();
    if (any_point) {
        if (a_str.empty() || b_str.empty() || zs.empty() || ws.empty())
            throw UsageError("explicit point needs all of --a --b --z --w");
        cfg.point.present = true;
        try {
            cfg.point.a = parse_rat(a_str);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--a: ") + e.what());
        }
        try {
            cfg.point.b = parse_rat(b_str);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--b: ") + e.what());
        }
        cfg.point.z = parse_rat_list("--z", zs);
        cfg.point.w = parse_rat_list("--w", ws);
        // only the universal constraints here; each quantity checks its own
        // denominator loci and reports them as evaluation errors
        const Rat& a = cfg.point.a;
        if (a == 0 || a == 1 || a == -1 || cfg.point.b == 0 || cfg.point.b == 1 ||
            cfg.point.b == -1)
            throw UsageError("explicit point sits on a singular locus (a^4 = 1 or b^2 = 1)");
        for (const auto& zj : cfg.point.z)
            if (zj == 0 || zj == 1 || zj == -1)
                throw UsageError("--z: values 0 and +-1 are singular");
        for (const auto& wj : cfg.point.w)
            if (wj == 0) throw UsageError("--w: zero inhomogeneity");
    }
    return cfg;
}

std::vector<std::string> render_args(const RunConfig& cfg) {
    std::vector<std::string> out{to_token(cfg.command),
                                 "--target", to_token(cfg.target),
                                 "--M", std::to_string(cfg.M),
                                 "--N", std::to_string(cfg.N),
                                 "--seed", std::to_string(cfg.seed),
                                 "--output", to_token(cfg.output),
                                 "--trials", std::to_string(cfg.trials)};
    if (!cfg.x.empty()) {
        std::string xs;
        for (std::size_t i = 0; i < cfg.x.size(); ++i) {
            if (i) xs += ",";
            xs += std::to_string(cfg.x[i]);
        }
        out.insert(out.end(), {"--x", xs});
    }
    if (cfg.point.present) {
        out.insert(out.end(), {"--a", to_string(cfg.point.a), "--b", to_string(cfg.point.b),
                               "--z", join_rats(cfg.point.z), "--w", join_rats(cfg.point.w)});
    }
    return out;
}

std::string emit_report(const std::vector<VerificationReport>& reports, OutputFormat format) {
    if (format == OutputFormat::kJson) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json obj;
            obj["check_id"] = r.check_id;
            obj["paper_ref"] = r.paper_ref;
            obj["seed"] = r.seed;
            obj["point"] = r.point_summary;
            obj["lhs"] = to_string(r.lhs);
            obj["rhs"] = to_string(r.rhs);
            obj["passed"] = r.passed;
            obj["elapsed_ms"] = static_cast<std::int64_t>(std::floor(r.elapsed_ms));
            arr.push_back(std::move(obj));
        }
        return arr.dump();
    }
    std::string out;
    for (const auto& r : reports) {
        out += r.check_id + ": " + (r.passed ? "PASS" : "FAIL") + " lhs=" + to_string(r.lhs) +
               " rhs=" + to_string(r.rhs) + " seed=" + std::to_string(r.seed) + " (" +
               r.point_summary + ")\n";
    }
    return out;
}

int exit_status(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

namespace {

struct Point {
    ModelParams p;
    std::vector<Rat> z;
    std::vector<Rat> w;
};

Point resolve_point(const RunConfig& cfg, int M, int N, unsigned flags) {
    if (cfg.point.present)
        return {{cfg.point.a, cfg.point.b}, cfg.point.z, cfg.point.w};
    const SamplePoint pt = sample_point(cfg.seed, M, N, flags);
    return {{pt.a, pt.b}, pt.z, pt.w};
}

int run_compute(const RunConfig& cfg, std::ostream& out) {
    const OccupationConfig x = cfg.x.empty() ? default_config(cfg.M, cfg.N)
                                             : OccupationConfig{cfg.M, cfg.x};
    Rat value;
    switch (cfg.target) {
        case Target::kWavefunction: {
            const Point pt = resolve_point(cfg, cfg.M, cfg.N, kCore);
            value = wavefunction_oracle(pt.p, pt.z, pt.w, x);
            break;
        }
        case Target::kDual: {
            const Point pt = resolve_point(cfg, cfg.M, cfg.N, kCore);
            value = dual_wavefunction_oracle(pt.p, pt.z, pt.w, x);
            break;
        }
        case Target::kSymfunc: {
            const Point pt = resolve_point(cfg, cfg.M, cfg.N, kCore);
            value = eval_F(pt.p, pt.z, pt.w, x);
            break;
        }
        case Target::kDualSymfunc: {
            const Point pt = resolve_point(cfg, cfg.M, cfg.N, kCore);
            value = eval_F_bar(pt.p, pt.z, pt.w, x);
            break;
        }
        case Target::kDwbcDet: {
            const Point pt = resolve_point(cfg, cfg.M, cfg.M, kCore);
            value = domain_wall_det(pt.p, pt.z, pt.w);
            break;
        }
        case Target::kDwbcHom: {
            const Point pt = resolve_point(cfg, cfg.M, cfg.M, kHomogeneousDet);
            value = domain_wall_det_homogeneous(pt.p, pt.z);
            break;
        }
        case Target::kBetheF: {
            const Point pt = resolve_point(cfg, cfg.M, cfg.N, kBetheMomenta);
            value = eval_f(momenta_from_spectral(pt.p, pt.z, cfg.M), x);
            break;
        }
        default:
            throw UsageError("--target: '" + to_token(cfg.target) +
                             "' names a check, not a computable quantity");
    }
    if (cfg.output == OutputFormat::kJson) {
        nlohmann::ordered_json obj;
        obj["target"] = to_token(cfg.target);
        obj["value"] = to_string(value);
        out << obj.dump() << "\n";
    } else {
        out << to_string(value) << "\n";
    }
    return 0;
}

unsigned checks_for(Target t) {
    switch (t) {
        case Target::kLemma: return kLemma;
        case Target::kTheorem52:
        case Target::kWavefunction:
        case Target::kDual:
        case Target::kSymfunc:
        case Target::kDualSymfunc: return kTheorem52;
        case Target::kProperties: return kProperties;
        case Target::kPairing:
        case Target::kDwbcDet:
        case Target::kDwbcHom: return kPairing;
        case Target::kBetheF: return kBethe;
        case Target::kAll: return kAllChecks;
    }
    return kAllChecks;
}

std::vector<VerificationReport> verify_at_point(const RunConfig& cfg) {
    const ModelParams p{cfg.point.a, cfg.point.b};
    const auto& z = cfg.point.z;
    const auto& w = cfg.point.w;
    const int M = static_cast<int>(w.size());
    const int N = static_cast<int>(z.size());
    const OccupationConfig x =
        cfg.x.empty() ? default_config(M, N) : OccupationConfig{M, cfg.x};
    std::vector<VerificationReport> reports;
    switch (cfg.target) {
        case Target::kLemma:
            reports.push_back(check_lemma_identity(p, z[0], w, M + 1, cfg.seed));
            break;
        case Target::kTheorem52:
            reports.push_back(check_theorem_5_2(p, z, w, x, false, cfg.seed));
            reports.push_back(check_theorem_5_2(p, z, w, x, true, cfg.seed));
            break;
        case Target::kProperties:
            for (bool dual : {false, true}) {
                auto batch = check_properties(p, z, w, x, kAllProperties, dual, cfg.seed);
                reports.insert(reports.end(), batch.begin(), batch.end());
            }
            break;
        case Target::kPairing:
            if (N != M)
                throw UsageError("--z: pairing needs M spectral parameters");
            reports.push_back(check_pairing(p, z, w, cfg.N, false, cfg.seed));
            break;
        case Target::kBetheF:
            reports.push_back(check_coordinate_relation(p, z, M, x, cfg.seed));
            break;
        default:
            throw UsageError("explicit point verification needs a single check target");
    }
    return reports;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<VerificationReport> reports;
    if (cfg.point.present) {
        reports = verify_at_point(cfg);
    } else {
        const std::vector<std::pair<int, int>> sizes{{cfg.M, cfg.N}};
        for (int t = 0; t < cfg.trials; ++t) {
            auto batch = run_suite(cfg.seed + static_cast<std::uint64_t>(t), sizes,
                                   checks_for(cfg.target));
            reports.insert(reports.end(), batch.begin(), batch.end());
        }
    }
    out << emit_report(reports, cfg.output);
    if (cfg.output == OutputFormat::kJson) out << "\n";
    return exit_status(reports);
}

int run_bench(const RunConfig& cfg, std::ostream& out) {
    using Clock = std::chrono::steady_clock;
    auto time_ms = [](auto&& fn) {
        const auto t0 = Clock::now();
        fn();
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };
    for (const auto& [M, N] : std::vector<std::pair<int, int>>{{4, 2}, {6, 3}, {8, 4}}) {
        const SamplePoint pt = sample_point(cfg.seed, M, N);
        const OccupationConfig x = default_config(M, N);
        const ModelParams p{pt.a, pt.b};
        const double ms = time_ms([&] { eval_F(p, pt.z, pt.w, x); });
        out << "symfunc M=" << M << " N=" << N << " " << ms << " ms\n";
    }
    for (const auto& [M, N] : std::vector<std::pair<int, int>>{{6, 2}, {8, 3}, {10, 4}}) {
        const SamplePoint pt = sample_point(cfg.seed, M, N);
        const OccupationConfig x = default_config(M, N);
        const ModelParams p{pt.a, pt.b};
        const double ms = time_ms([&] { wavefunction_oracle(p, pt.z, pt.w, x); });
        out << "oracle M=" << M << " N=" << N << " " << ms << " ms\n";
    }
    return 0;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.command) {
        case Command::kCompute: return run_compute(cfg, out);
        case Command::kVerify: return run_verify(cfg, out);
        case Command::kBench: return run_bench(cfg, out);
    }
    return 2;
}

}  // namespace rvertex
