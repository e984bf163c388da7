#pragma once

#include "supercount/curve.hpp"
#include "supercount/lift.hpp"
#include "supercount/quadratic.hpp"

#include <string>

namespace supercount {

enum class Method { Auto, Trinomial, Bgs, Direct };

// "auto" | "trinomial" | "bgs" | "direct"; throws ParseError otherwise
Method parse_method(const std::string& name);
const char* method_name(Method m);

// auto picks trinomial when applicable, the direct fill for tiny p, and the
// recurrence walk otherwise (cheapest applicable route first)
Method resolve_method(const CurveSpec& spec, Method requested);

struct CountReport {
    CountResult result;
    Method method = Method::Auto;  // the route actually taken
    double ms = 0;                 // wall clock of the computation alone
};

// exact #C(F_p) by the chosen route; validates the curve first. throws
// AmbiguousLift when p <= 16 g^2 leaves two trace lifts in the weil window
CountReport count_points(const CurveSpec& spec, Method method = Method::Auto,
                         const SqrtStrategy& strategy = SqrtStrategy::sequential());

}  // namespace supercount
