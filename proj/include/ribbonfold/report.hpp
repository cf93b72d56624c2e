#ifndef RIBBONFOLD_REPORT_HPP
#define RIBBONFOLD_REPORT_HPP

#include <limits>

#include <json.hpp>

#include "braid.hpp"
#include "geometry.hpp"
#include "laurent.hpp"
#include "planner.hpp"

namespace ribbonfold {

using json = nlohmann::ordered_json;

inline json braid_report(const BraidWord& b) {
    return json{{"strands", b.strands}, {"word", b.letters}};
}

// {"terms": [[exponent, coefficient], ...]} sorted by exponent ascending.
inline json laurent_report(const LaurentPolynomial& f) {
    json terms = json::array();
    for (auto& [e, c] : f.terms()) {
        if (c > BigInt(std::numeric_limits<long long>::max()) ||
            c < BigInt(std::numeric_limits<long long>::min()))
            terms.push_back({e, c.str()});
        else
            terms.push_back({e, static_cast<long long>(c)});
    }
    return json{{"terms", terms}};
}

inline json params_report(const TwistParams& t) {
    return json{{"p", t.p}, {"q", t.q}, {"r", t.r}, {"s", t.s}};
}

inline json transforms_report(const TwistParams& t) {
    return json{{"mirrored", t.mirrored}, {"swapped_pq", t.swapped_pq}};
}

inline const char* region_name(BandRegion r) {
    return r == BandRegion::Upper ? "UPPER" : "LOWER";
}

inline json plan_report(const FoldPlan& plan) {
    json bands = json::array();
    for (const auto& e : plan.entries) {
        json b{{"weight", e.weight},
               {"region", region_name(e.region)},
               {"fold", fold_name(e.fold)},
               {"role", e.role}};
        if (e.twist_box) b["box"] = *e.twist_box;
        bands.push_back(std::move(b));
    }
    Rational len_over_w = plan_length(plan) / plan.width;
    const TwistParams& t = plan.params;
    return json{{"params", params_report(t)},
                {"transforms", transforms_report(t)},
                {"case", case_name(plan.branch)},
                {"bands", bands},
                {"length_over_w", len_over_w.num()},
                {"rib_upper_bound",
                 ribbonlength_upper_bound(t.p, t.q, t.r, t.s, t.permissive)},
                {"warnings", t.warnings()}};
}

inline json validation_report_json(const ValidationReport& rep, const Rational& width) {
    Rational over_w = rep.measured_length / width;
    return json{{"fold_lines_disjoint", rep.fold_lines_disjoint},
                {"crossings_consistent", rep.crossings_consistent},
                {"length_matches", rep.length_matches},
                {"measured_length_over_w", over_w.str()},
                {"violations", rep.violations}};
}

} // namespace ribbonfold

#endif
