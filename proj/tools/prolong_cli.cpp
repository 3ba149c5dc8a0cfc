#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <fstream>
#include <iostream>

#include "prolong/json.hpp"
#include "prolong/macaulay.hpp"
#include "prolong/oracle.hpp"

using namespace prolong;
using io::json;

namespace {

struct GlobalFlags {
    bool as_json = false;
    bool explain = false;
    std::uint64_t bit_cap = 0;  // 0 = leave default / env
};

void apply_bit_cap(const GlobalFlags& g) {
    if (g.bit_cap) {
        bitcap::set(g.bit_cap);
        return;
    }
    if (const char* env = std::getenv("PROLONG_BIT_CAP")) {
        char* end = nullptr;
        std::uint64_t bits = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && bits > 0) bitcap::set(bits);
    }
}

// "2", "1..4" or "1,3,7".
std::vector<std::uint64_t> parse_range(const std::string& text) {
    std::vector<std::uint64_t> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        std::uint64_t lo = std::stoull(text.substr(0, dots));
        std::uint64_t hi = std::stoull(text.substr(dots + 2));
        for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoull(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

void print_report(const bounds::BoundReport& report, const GlobalFlags& g) {
    if (g.as_json) {
        std::cout << io::to_json(report).dump() << "\n";
    } else if (g.explain) {
        std::cout << report.value.get_str() << "  # " << report.formula_path;
        for (const auto& [k, v] : report.intermediates) std::cout << " " << k << "=" << v.get_str();
        std::cout << "\n";
    } else {
        std::cout << report.value.get_str() << "\n";
    }
}

int run_bound(const std::string& which, std::uint64_t r, std::uint64_t m, std::uint64_t n,
              const GlobalFlags& g) {
    bounds::BoundReport report;
    if (which == "c")
        report = bounds::prolongation_bound(r, m, n);
    else if (which == "pierce")
        report = bounds::legacy_doubling_bound(r, m, n);
    else if (which == "leov-rec") {
        if (m != 2) throw CLI::ValidationError("--which leov-rec requires --m 2");
        report = bounds::legacy_recursive_bound_m2(r, n);
    } else if (which == "leov-ack")
        report = bounds::legacy_ackermann_bound(r, m, n);
    else if (which == "an-upper")
        report = {bounds::ackermann_iterated(n, m, r), "iterated_ackermann", {}};
    else
        throw CLI::ValidationError("unknown --which: " + which);
    print_report(report, g);
    return 0;
}

bounds::GrowthFunction make_growth(const std::string& kind, std::uint64_t r, std::uint64_t s,
                                   std::uint64_t m, std::uint64_t n,
                                   const std::vector<std::uint64_t>& table_values) {
    if (kind == "g") return bounds::staged_growth(r, m, n);
    if (kind == "arith") return bounds::GrowthFunction::arithmetic(s);
    if (kind == "doubling") return bounds::GrowthFunction::doubling(r);
    if (kind == "table") {
        std::vector<BigCount> vals(table_values.begin(), table_values.end());
        return bounds::GrowthFunction::table(std::move(vals));
    }
    throw CLI::ValidationError("unknown --growth: " + kind);
}

struct VerifyOverrides {
    std::optional<std::uint64_t> m, d, r, n;
};

int run_verify(const std::string& suite, bool quick, std::uint64_t budget, unsigned jobs,
               std::uint64_t seed, const VerifyOverrides& ov, const GlobalFlags& g) {
    std::vector<oracle::VerificationReport> reports;
    bool budget_hit = false;

    auto run_macaulay = [&] {
        if (ov.m && ov.d) {
            reports.push_back(oracle::sweep_strict_macaulay(*ov.m, *ov.d, jobs));
            return;
        }
        for (auto [m, d] : std::vector<std::pair<std::size_t, std::uint64_t>>{
                 {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
            reports.push_back(oracle::sweep_strict_macaulay(m, d, jobs));
        for (std::uint64_t d = 1; d <= (quick ? 6u : 8u); ++d)
            reports.push_back(oracle::sweep_block_converse_m2(d));
    };
    auto run_sperner = [&] {
        reports.push_back(oracle::sweep_sperner_inequality(2, quick ? 100 : 200));
        reports.push_back(oracle::sweep_sperner_inequality(3, quick ? 100 : 200));
    };
    auto run_techlem = [&] {
        std::uint64_t per = quick ? 2000 : 10000;
        for (std::size_t m = 2; m <= 3; ++m)
            for (std::uint64_t d = 1; d <= 4; ++d)
                reports.push_back(oracle::sweep_shadow_sum_inequality(m, d, per, seed));
    };
    auto run_brute = [&] {
        if (ov.r && ov.m && ov.n) {
            BigCount expect = bounds::prolongation_bound(*ov.r, *ov.m, *ov.n).value;
            std::uint64_t window = to_u64(expect, "verify window") + 1;
            oracle::BruteMaxOptions opts;
            opts.budget = budget;
            opts.jobs = jobs;
            auto res = oracle::brute_force_max_level(*ov.r, *ov.m, *ov.n, window, opts);
            if (BigCount(res.max_level) != expect)
                res.report.failures.push_back("max level " + std::to_string(res.max_level) +
                                              " != expected " + expect.get_str());
            reports.push_back(res.report);
            return;
        }
        struct Inst {
            std::uint64_t r, m, n, window;
            std::uint64_t expect;
        };
        std::vector<Inst> instances{{1, 2, 1, 3, 2}, {2, 2, 1, 5, 4}, {1, 2, 2, 5, 4}};
        if (!quick) instances.push_back({1, 3, 1, 4, 3});
        for (const auto& inst : instances) {
            oracle::BruteMaxOptions opts;
            opts.budget = budget;
            opts.jobs = jobs;
            auto res = oracle::brute_force_max_level(inst.r, inst.m, inst.n, inst.window, opts);
            if (res.max_level != inst.expect)
                res.report.failures.push_back("max level " + std::to_string(res.max_level) +
                                              " != expected " + std::to_string(inst.expect));
            reports.push_back(res.report);
        }
        // Two-derivation window at r=2,m=3 is astronomically large; run the
        // len-capped and randomized sweep.
        oracle::BruteMaxOptions capped;
        capped.budget = budget;
        capped.len_cap = 3;
        capped.random_samples = quick ? 1000 : 20000;
        capped.seed = seed;
        auto res = oracle::brute_force_max_level(2, 3, 1, 10, capped);
        if (res.max_level != 9)
            res.report.failures.push_back("max level " + std::to_string(res.max_level) +
                                          " != expected 9");
        reports.push_back(res.report);
    };
    auto run_domination = [&] {
        std::uint64_t sets = quick ? 100 : 400;
        if (ov.r && ov.m && ov.n) {
            reports.push_back(oracle::sweep_hilbert_domination(*ov.r, *ov.m, *ov.n, sets, seed));
            return;
        }
        reports.push_back(oracle::sweep_hilbert_domination(2, 2, 1, sets, seed));
        reports.push_back(oracle::sweep_hilbert_domination(1, 2, 2, sets, seed));
        reports.push_back(oracle::sweep_hilbert_domination(1, 3, 1, sets, seed));
    };

    try {
        if (suite == "macaulay" || suite == "all") run_macaulay();
        if (suite == "sperner" || suite == "all") run_sperner();
        if (suite == "techlem1" || suite == "all") run_techlem();
        if (suite == "brute-c" || suite == "all") run_brute();
        if (suite == "domination" || suite == "all") run_domination();
    } catch (const EnumerationLimit& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        budget_hit = true;
    }
    if (reports.empty() && !budget_hit)
        throw CLI::ValidationError("unknown --suite: " + suite);

    bool any_failure = false;
    for (const auto& report : reports) {
        any_failure |= !report.ok();
        if (g.as_json) {
            std::cout << io::to_json(report).dump() << "\n";
        } else {
            std::cout << (report.ok() ? "PASS " : "FAIL ") << report.claim << " [";
            for (std::size_t i = 0; i < report.params.size(); ++i)
                std::cout << (i ? " " : "") << report.params[i].first << "="
                          << report.params[i].second;
            std::cout << "] instances=" << report.instances_checked
                      << (report.complete ? "" : " (partial coverage)") << "\n";
            for (const auto& f : report.failures) std::cout << "  counterexample: " << f << "\n";
        }
    }
    if (budget_hit) return 2;
    return any_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Effective prolongation-length bounds for differential kernels"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags g;
    app.add_flag("--json", g.as_json, "structured JSON output");
    app.add_flag("--explain", g.explain, "include the formula path and intermediates");
    app.add_option("--bit-cap", g.bit_cap,
                   "bit-length cap for all big integers (default 2^24; env PROLONG_BIT_CAP)");

    std::uint64_t r = 0, m = 1, n = 1, s = 1, d = 1, dim_v = 0;
    bool has_dim_v = false;

    auto* bound = app.add_subcommand("bound", "compute one bound");
    std::string which = "c";
    bound->add_option("--r", r)->required();
    bound->add_option("--m", m)->required();
    bound->add_option("--n", n)->required();
    bound->add_option("--which", which, "c | pierce | leov-rec | leov-ack | an-upper");

    auto* dr = app.add_subcommand("dr", "minimal consistent level of an antichain sequence");
    std::string file;
    dr->add_option("--file", file, "antichain JSON file, or - for stdin")->required();
    dr->add_option("--r", r)->required();

    auto* mu = app.add_subcommand("mu", "greedy maximal antichain sequence");
    std::string growth = "g";
    std::vector<std::uint64_t> table_values;
    mu->add_option("--r", r);
    mu->add_option("--s", s);
    mu->add_option("--m", m)->required();
    mu->add_option("--n", n);
    mu->add_option("--growth", growth, "g | arith | doubling | table");
    mu->add_option("--values", table_values, "table growth values")->delimiter(',');

    auto* lmax = app.add_subcommand("lmax", "maximal antichain length for a growth function");
    lmax->add_option("--r", r);
    lmax->add_option("--s", s);
    lmax->add_option("--m", m)->required();
    lmax->add_option("--n", n);
    lmax->add_option("--growth", growth, "g | arith | doubling | table");
    lmax->add_option("--values", table_values, "table growth values")->delimiter(',');

    auto* apps = app.add_subcommand("apps", "downstream application bounds");
    apps->add_option("--r", r)->required();
    apps->add_option("--m", m)->required();
    apps->add_option("--n", n)->required();
    apps->add_option("--dim-v", dim_v)->each([&](const std::string&) { has_dim_v = true; });

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    bool quick = false;
    std::uint64_t budget = 10'000'000;
    unsigned jobs = 1;
    std::uint64_t seed = 20240915;
    verify->add_option("--suite", suite, "macaulay | sperner | techlem1 | brute-c | domination | all");
    verify->add_flag("--quick", quick, "reduced budgets");
    verify->add_option("--budget", budget, "enumeration budget");
    verify->add_option("--jobs", jobs, "worker threads for sweeps");
    verify->add_option("--seed", seed, "seed for randomized sweeps");
    verify->add_option("--m", m);
    verify->add_option("--d", d);
    verify->add_option("--r", r);
    verify->add_option("--n", n);

    auto* table = app.add_subcommand("table", "cross product of prolongation bounds");
    std::string rs = "1..3", ms = "2", ns = "1", format = "csv";
    table->add_option("--rs", rs);
    table->add_option("--ms", ms);
    table->add_option("--ns", ns);
    table->add_option("--format", format, "csv | json | md");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);
    apply_bit_cap(g);

    try {
        if (*bound) return run_bound(which, r, m, n, g);

        if (*dr) {
            json parsed;
            if (file == "-") {
                parsed = json::parse(std::cin);
            } else {
                std::ifstream in(file);
                if (!in) throw std::invalid_argument("cannot open " + file);
                parsed = json::parse(in);
            }
            auto seq = io::antichain_from_json(parsed);
            auto result = consistency::min_consistent_level(seq, r);
            if (g.as_json)
                std::cout << io::to_json(result).dump() << "\n";
            else
                std::cout << result.level << "\n";
            return 0;
        }

        if (*mu) {
            auto f = make_growth(growth, r, s, m, n, table_values);
            auto seq = bounds::greedy_antichain(f, m, n);
            std::cout << io::to_json(seq).dump() << "\n";
            return 0;
        }

        if (*lmax) {
            auto f = make_growth(growth, r, s, m, n, table_values);
            std::cout << bounds::max_antichain_length(f, m, n).get_str() << "\n";
            return 0;
        }

        if (*apps) {
            auto emit = [&](const std::string& name, auto compute) {
                try {
                    std::cout << name << "=" << compute().get_str() << "\n";
                } catch (const ValueExceedsLimit&) {
                    std::cout << name << "=>LIMIT\n";
                }
            };
            emit("characteristic_set_order_bound",
                 [&] { return bounds::characteristic_set_order_bound(r, m, n).value; });
            emit("component_order_bound",
                 [&] { return bounds::component_order_bound(r, m, n).value; });
            bounds::BoundReport null_rep;
            bool have_null = true;
            try {
                null_rep = bounds::nullstellensatz_order_bound(r, m, n);
            } catch (const ValueExceedsLimit&) {
                have_null = false;
            }
            if (have_null) {
                std::cout << "nullstellensatz_T=" << null_rep.value.get_str() << "\n";
                std::cout << "alpha_T_minus_1=" << null_rep.find("alpha_T_minus_1")->get_str()
                          << "\n";
                std::cout << "alpha_T=" << null_rep.find("alpha_T")->get_str() << "\n";
            } else {
                std::cout << "nullstellensatz_T=>LIMIT\nalpha_T_minus_1=>LIMIT\nalpha_T=>LIMIT\n";
            }
            if (has_dim_v) {
                try {
                    auto bez = bounds::bezout_exponents(n, r, m, dim_v);
                    std::cout << "bezout_e_V=" << bez.find("e_V")->get_str() << "\n";
                    std::cout << "bezout_e_W=" << bez.find("e_W")->get_str() << "\n";
                } catch (const ValueExceedsLimit&) {
                    std::cout << "bezout_e_V=>LIMIT\nbezout_e_W=>LIMIT\n";
                }
            }
            return 0;
        }

        if (*verify) {
            VerifyOverrides ov;
            if (verify->count("--m")) ov.m = m;
            if (verify->count("--d")) ov.d = d;
            if (verify->count("--r")) ov.r = r;
            if (verify->count("--n")) ov.n = n;
            return run_verify(suite, quick, budget, jobs, seed, ov, g);
        }

        if (*table) {
            auto rvals = parse_range(rs), mvals = parse_range(ms), nvals = parse_range(ns);
            auto cell = [&](std::uint64_t rv, std::uint64_t mv, std::uint64_t nv) -> std::string {
                try {
                    return bounds::prolongation_bound(rv, mv, nv).value.get_str();
                } catch (const ValueExceedsLimit&) {
                    return ">LIMIT";
                }
            };
            if (format == "csv") {
                std::cout << "r,m,n,C\n";
                for (auto rv : rvals)
                    for (auto mv : mvals)
                        for (auto nv : nvals)
                            std::cout << rv << "," << mv << "," << nv << ","
                                      << cell(rv, mv, nv) << "\n";
            } else if (format == "json") {
                json rows = json::array();
                for (auto rv : rvals)
                    for (auto mv : mvals)
                        for (auto nv : nvals)
                            rows.push_back(json{{"r", rv}, {"m", mv}, {"n", nv},
                                                {"C", cell(rv, mv, nv)}});
                std::cout << rows.dump() << "\n";
            } else if (format == "md") {
                std::cout << "| r | m | n | C |\n|---|---|---|---|\n";
                for (auto rv : rvals)
                    for (auto mv : mvals)
                        for (auto nv : nvals)
                            std::cout << "| " << rv << " | " << mv << " | " << nv << " | "
                                      << cell(rv, mv, nv) << " |\n";
            } else {
                throw CLI::ValidationError("unknown --format: " + format);
            }
            return 0;
        }
    } catch (const ValueExceedsLimit& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const EnumerationLimit& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
