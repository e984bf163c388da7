// supercount: exact point counts for superelliptic curves y^a = x^b f(x)
// over prime fields. stdout carries data only; diagnostics go to stderr.

#include "supercount/caps.hpp"
#include "supercount/count.hpp"
#include "supercount/hw_direct.hpp"
#include "supercount/oracle.hpp"
#include "supercount/recurrence.hpp"
#include "supercount/trinomial.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <condition_variable>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

using namespace supercount;
using nlohmann::json;

namespace {

// json numbers above 2^53 lose precision in double-based consumers; emit
// those as decimal strings
json num_or_string(const Integer& v) {
    static const Integer safe = Integer(1) << 53;
    if (v >= -safe && v <= safe) return static_cast<long long>(v.get_si());
    return to_decimal(v);
}

json string_array(const std::vector<Integer>& xs) {
    json out = json::array();
    for (auto& x : xs) out.push_back(to_decimal(x));
    return out;
}

CurveSpec load_curve(const std::string& text, const std::string& p_text) {
    CurveSpec spec = parse_curve(text);
    if (!p_text.empty()) {
        if (spec.p != 0) throw ParseError("p is set both in the curve text and via --p");
        spec.p = from_decimal(p_text);
    }
    return spec;
}

SqrtStrategy strategy_from(const std::optional<std::uint64_t>& seed) {
    return seed ? SqrtStrategy::probabilistic(*seed) : SqrtStrategy::sequential();
}

// per-row seed mix so batch output is reproducible for a fixed --seed
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t p) {
    std::uint64_t z = seed ^ (p * 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// hasse-witt, charpoly and jacobian want the full matrix; the closed-form
// trinomial route does not provide it
HasseWittMatrix matrix_for(const CurveSpec& spec, Method method) {
    if (method == Method::Trinomial)
        throw ParseError("the trinomial route has no full-matrix form; use bgs or direct");
    if (method == Method::Auto) method = spec.p <= 1024 ? Method::Direct : Method::Bgs;
    return method == Method::Direct ? hw_matrix_direct(spec) : hw_matrix_bgs(spec);
}

int run_count(const CurveSpec& spec, Method method, const SqrtStrategy& strategy) {
    auto report = count_points(spec, method, strategy);
    json out = {{"schema", "1"},
                {"p", num_or_string(spec.p)},
                {"count", num_or_string(report.result.count)},
                {"trace", num_or_string(report.result.trace)},
                {"method", method_name(report.method)},
                {"genus", report.result.genus},
                {"ms", report.ms}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_hasse_witt(const CurveSpec& spec, Method method) {
    auto A = matrix_for(require_valid(spec), method);
    json basis = json::array();
    for (auto& q : A.basis.points) basis.push_back({q.i, q.j});
    json entries = json::array();
    for (auto& row : A.entries) entries.push_back(string_array(row));
    json out = {{"schema", "1"},
                {"p", num_or_string(A.p)},
                {"genus", A.genus()},
                {"basis", basis},
                {"entries", entries}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_charpoly(const CurveSpec& spec, Method method) {
    auto A = matrix_for(require_valid(spec), method);
    json out = {{"schema", "1"},
                {"p", num_or_string(A.p)},
                {"genus", A.genus()},
                {"charpoly", string_array(charpoly_mod(A))},
                {"frobenius", string_array(frobenius_charpoly_mod(A))}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_jacobian(const CurveSpec& spec, Method method, const Natural& cap) {
    CurveSpec valid = require_valid(spec);
    long g = genus(valid);
    json out = {{"schema", "1"}, {"p", num_or_string(valid.p)}, {"genus", g}};
    if (g == 0) {
        out["orders"] = string_array({Integer(1)});
        out["resolved"] = true;
    } else if (g == 1) {
        auto A = matrix_for(valid, method);
        Integer t = lift_trace(trace(A), valid.p, 1);
        out["orders"] = string_array({count_from_trace(t, valid.p)});
        out["resolved"] = true;
    } else if (g == 2) {
        auto A = matrix_for(valid, method);
        Integer a1 = lift_trace(trace(A), valid.p, 2);
        auto chi = charpoly_mod(A);  // t^2 - a1 t + a2 mod p
        auto cand = jacobian_candidates_g2(a1, chi[0], valid.p);
        out["a1"] = num_or_string(cand.a1);
        out["interval"] = string_array({cand.a2_lo, cand.a2_hi});
        out["a2_values"] = string_array(cand.a2_values);
        out["orders"] = string_array(cand.orders);
        out["resolved"] = false;
    } else if (g == 3) {
        auto A = matrix_for(valid, method);
        Integer jmod = jacobian_order_mod_p(A);
        auto cand = jacobian_candidates_g3(jmod, valid.p, cap);
        out["residue"] = to_decimal(jmod);
        out["interval"] = string_array({cand.lo, cand.hi});
        out["total"] = num_or_string(cand.total);
        if (!cand.orders.empty()) out["orders"] = string_array(cand.orders);
        out["resolved"] = false;
    } else {
        throw Unsupported("no jacobian handling for genus " + std::to_string(g));
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_validate(const CurveSpec& spec) {
    auto issues = validate(spec);
    json list = json::array();
    for (auto& issue : issues) list.push_back({{"code", issue.code}, {"detail", issue.detail}});
    json out = {{"schema", "1"}, {"valid", issues.empty()}, {"issues", list}};
    std::cout << out.dump() << "\n";
    return issues.empty() ? 0 : 1;
}

int run_oracle(const CurveSpec& spec) {
    CurveSpec valid = require_valid(spec);
    json out = {{"schema", "1"}, {"p", num_or_string(valid.p)}};
    out["affine"] = num_or_string(oracle::affine_count(valid));
    try {
        out["smooth"] = num_or_string(oracle::smooth_count(valid));
    } catch (const Unsupported&) {
        out["smooth"] = nullptr;
    }
    if (genus(valid) == 2) {
        try {
            out["jacobian_g2"] = num_or_string(oracle::jacobian_order_g2(valid));
        } catch (const error&) {
            out["jacobian_g2"] = nullptr;
        }
    }
    std::cout << out.dump() << "\n";
    return 0;
}

constexpr unsigned long kBatchCap = 10000000;

int run_batch(const CurveSpec& family, const std::string& bound_text,
              const std::string& from_text, Method method,
              const std::optional<std::uint64_t>& seed, unsigned jobs) {
    if (family.p != 0) throw ParseError("batch sweeps p; leave it out of the curve text");
    Integer bound = from_decimal(bound_text);
    if (bound > kBatchCap)
        throw ParseError("bound above the batch cap " + std::to_string(kBatchCap));
    Integer from = from_text.empty() ? Integer(3) : from_decimal(from_text);
    bool resuming = from > 3;

    std::vector<Integer> primes;
    Integer p = from < 3 ? Integer(3) : from;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > bound) break;
        primes.push_back(p);
    }

    long ac = family.a * family.c();
    auto row_for = [&](size_t idx) -> std::string {
        const Integer& q = primes[idx];
        CurveSpec spec = family;
        spec.p = q;
        long e = to_long(gcd(Integer(ac), q - 1));
        std::string head = to_decimal(q) + "," + std::to_string(e) + ",";
        auto issues = validate(spec);
        if (!issues.empty()) return head + ",,," + issues.front().code;
        if (method == Method::Trinomial) {
            std::string why;
            if (!trinomial_applicable(spec, &why))
                return head + ",,," + why.substr(0, why.find(':'));
        }
        SqrtStrategy strategy =
            seed ? SqrtStrategy::probabilistic(mix_seed(*seed, to_u64(q))) : SqrtStrategy::sequential();
        try {
            auto report = count_points(spec, method, strategy);
            return head + to_decimal(report.result.trace) + "," +
                   to_decimal(report.result.count) + "," + method_name(report.method) + ",";
        } catch (const error& err) {
            return head + ",,," + err.code();
        } catch (const std::exception&) {
            return head + ",,,InternalError";
        }
    };

    if (!resuming) std::cout << "p,e,trace,count,method,skipped_reason\n" << std::flush;

    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<size_t>(jobs, std::max<size_t>(primes.size(), 1));

    // workers fill rows out of order; the main thread prints them in order so
    // partial output is always a clean ascending prefix
    std::vector<std::optional<std::string>> rows(primes.size());
    std::atomic<size_t> next_task{0};
    std::mutex lock;
    std::condition_variable ready;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (;;) {
                size_t idx = next_task.fetch_add(1);
                if (idx >= primes.size()) return;
                std::string row = row_for(idx);
                {
                    std::lock_guard<std::mutex> hold(lock);
                    rows[idx] = std::move(row);
                }
                ready.notify_all();
            }
        });
    for (size_t idx = 0; idx < rows.size(); ++idx) {
        std::unique_lock<std::mutex> hold(lock);
        ready.wait(hold, [&] { return rows[idx].has_value(); });
        std::cout << *rows[idx] << "\n" << std::flush;
    }
    for (auto& worker : pool) worker.join();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact #C(F_p) for superelliptic curves y^a = x^b f(x)"};
    app.require_subcommand(1);

    std::string curve_text, p_text, method_text = "auto", bound_text, from_text;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 0;
    unsigned long g3_cap = 10000;

    auto add_curve = [&](CLI::App* cmd, bool with_p = true) {
        cmd->add_option("--curve", curve_text, "curve text, e.g. \"a=2 b=0 m=[1,1,0,1]\"")
            ->required();
        if (with_p) cmd->add_option("--p", p_text, "prime, decimal (unless set in the text)");
    };

    auto* cmd_count = app.add_subcommand("count", "exact point count");
    add_curve(cmd_count);
    cmd_count->add_option("--method", method_text, "auto | trinomial | bgs | direct");
    cmd_count->add_option("--seed", seed, "seed for the probabilistic nonresidue search");

    auto* cmd_hw = app.add_subcommand("hasse-witt", "matrix of the p-power operator mod p");
    add_curve(cmd_hw);
    cmd_hw->add_option("--method", method_text, "auto | bgs | direct");

    auto* cmd_charpoly = app.add_subcommand("charpoly", "charpoly mod p and frobenius charpoly");
    add_curve(cmd_charpoly);
    cmd_charpoly->add_option("--method", method_text, "auto | bgs | direct");

    auto* cmd_jacobian = app.add_subcommand("jacobian", "jacobian order candidates");
    add_curve(cmd_jacobian);
    cmd_jacobian->add_option("--method", method_text, "auto | bgs | direct");
    cmd_jacobian->add_option("--cap", g3_cap, "materialize genus-3 lists up to this many");

    auto* cmd_batch = app.add_subcommand("batch", "csv sweep over primes 3 < p <= bound");
    add_curve(cmd_batch, false);
    cmd_batch->add_option("--bound", bound_text, "sweep upper bound")->required();
    cmd_batch->add_option("--from", from_text, "resume after this value (suppresses the header)");
    cmd_batch->add_option("--method", method_text,
                          "auto | trinomial | bgs | direct; trinomial skips inapplicable p");
    cmd_batch->add_option("--seed", seed, "seed; rows are reproducible per (seed, p)");
    cmd_batch->add_option("--jobs", jobs, "worker threads (default: hardware)");

    auto* cmd_validate = app.add_subcommand("validate", "report validation issues");
    add_curve(cmd_validate);

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force reference counts");
    add_curve(cmd_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Method method = parse_method(method_text);
        if (cmd_batch->parsed())
            return run_batch(parse_curve(curve_text), bound_text, from_text, method, seed, jobs);
        CurveSpec spec = load_curve(curve_text, p_text);
        if (cmd_count->parsed()) return run_count(spec, method, strategy_from(seed));
        if (cmd_hw->parsed()) return run_hasse_witt(spec, method);
        if (cmd_charpoly->parsed()) return run_charpoly(spec, method);
        if (cmd_jacobian->parsed()) return run_jacobian(spec, method, Natural(g3_cap));
        if (cmd_validate->parsed()) return run_validate(spec);
        if (cmd_oracle->parsed()) return run_oracle(spec);
    } catch (const AmbiguousLift& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
