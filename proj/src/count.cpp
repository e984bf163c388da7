#include "supercount/count.hpp"

#include "supercount/hw_direct.hpp"
#include "supercount/recurrence.hpp"
#include "supercount/trinomial.hpp"

#include <chrono>

namespace supercount {

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::Auto;
    if (name == "trinomial") return Method::Trinomial;
    if (name == "bgs") return Method::Bgs;
    if (name == "direct") return Method::Direct;
    throw ParseError("unknown method " + name);
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Trinomial: return "trinomial";
        case Method::Bgs: return "bgs";
        case Method::Direct: return "direct";
        default: return "auto";
    }
}

namespace {
constexpr long kTinyPrime = 1024;  // below this the direct fill wins
}

Method resolve_method(const CurveSpec& spec, Method requested) {
    if (requested != Method::Auto) return requested;
    if (trinomial_applicable(spec)) return Method::Trinomial;
    if (spec.p <= kTinyPrime) return Method::Direct;
    return Method::Bgs;
}

CountReport count_points(const CurveSpec& spec, Method method, const SqrtStrategy& strategy) {
    CurveSpec valid = require_valid(spec);
    CountReport report;
    report.method = resolve_method(valid, method);
    auto started = std::chrono::steady_clock::now();
    if (report.method == Method::Trinomial) {
        report.result = count_points_fast(valid, strategy);
    } else {
        long g = genus(valid);
        if (g == 0) {
            report.result = {0, valid.p + 1, 0};
        } else {
            auto A = report.method == Method::Bgs ? hw_matrix_bgs(valid) : hw_matrix_direct(valid);
            Integer t = lift_trace(trace(A), valid.p, g);
            report.result = {t, count_from_trace(t, valid.p), g};
        }
    }
    report.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

}  // namespace supercount
