#ifndef RIBBONFOLD_CLI_HPP
#define RIBBONFOLD_CLI_HPP

#include <optional>
#include <sstream>
#include <string>

#include "diagram.hpp"
#include "garside.hpp"
#include "geometry.hpp"
#include "invariants.hpp"
#include "planner.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace ribbonfold {

// Exit code contract: 0 success, 1 certificate or validation failure,
// 2 invalid input, 3 link input (gcd != 1).
enum ExitCode : int { kOk = 0, kCertificateFailure = 1, kInvalidInput = 2, kLinkInput = 3 };

struct RunConfig {
    int p = 0, q = 0, r = 0, s = 0;
    Rational width = Rational(1);
    std::string format = "json"; // json | text | svg
    std::string out_path;
    bool permissive = false;
    bool force_standard = false;
    std::optional<std::pair<int, int>> range_p, range_q, range_r, range_s;
};

struct CmdResult {
    int exit_code = kOk;
    std::string output; // stdout payload (JSON or text)
    std::string svg;    // populated by render
};

namespace cli_detail {

inline CmdResult input_error(const std::invalid_argument& e) {
    CmdResult res;
    std::string msg = e.what();
    res.exit_code = msg.find("link, not knot") != std::string::npos ? kLinkInput : kInvalidInput;
    res.output = json{{"error", msg}}.dump(2) + "\n";
    return res;
}

} // namespace cli_detail

// Prints the certified bound and the construction case for one parameter set.
inline CmdResult cmd_bound(const RunConfig& cfg) {
    CmdResult res;
    try {
        TwistParams t = normalize_params(cfg.p, cfg.q, cfg.r, cfg.s, cfg.permissive);
        json out{{"params", params_report(t)},
                 {"transforms", transforms_report(t)},
                 {"case", case_name(case_branch(t))},
                 {"rib_upper_bound", ribbonlength_upper_bound(t.p, t.q, t.r, t.s, t.permissive)},
                 {"warnings", t.warnings()}};
        if (cfg.format == "text") {
            std::ostringstream os;
            os << "T(" << t.p << "," << t.q << ";" << t.r << "," << t.s << ")  case "
               << out["case"].get<std::string>() << "  ribbonlength <= "
               << out["rib_upper_bound"].get<long long>() << "\n";
            for (auto& w : t.warnings()) os << "warning: " << w << "\n";
            res.output = os.str();
        } else {
            res.output = out.dump(2) + "\n";
        }
    } catch (const std::invalid_argument& e) {
        return cli_detail::input_error(e);
    }
    return res;
}

// Emits the full fold plan: band table, per-band fold assignment, exact length.
inline CmdResult cmd_plan(const RunConfig& cfg) {
    CmdResult res;
    try {
        TwistParams t = normalize_params(cfg.p, cfg.q, cfg.r, cfg.s, cfg.permissive);
        FoldPlan plan =
            assign_fold_types(band_decomposition(t, cfg.force_standard), cfg.width);
        json out = plan_report(plan);
        out["width"] = cfg.width.str();
        out["total_length"] = plan_length(plan).str();
        if (cfg.format == "text") {
            std::ostringstream os;
            os << "case " << case_name(plan.branch) << ", length/w = "
               << out["length_over_w"].get<long long>() << "\n";
            for (const auto& e : plan.entries)
                os << "  band weight " << e.weight << "  " << region_name(e.region) << "  "
                   << fold_name(e.fold) << "  (" << e.role << ")\n";
            res.output = os.str();
        } else {
            res.output = out.dump(2) + "\n";
        }
    } catch (const std::invalid_argument& e) {
        return cli_detail::input_error(e);
    }
    return res;
}

// Assembles the layout, validates it, renders SVG. The SVG text is returned in
// the result; callers persist it only when validation and input checks pass.
inline CmdResult cmd_render(const RunConfig& cfg) {
    CmdResult res;
    try {
        TwistParams t = normalize_params(cfg.p, cfg.q, cfg.r, cfg.s, cfg.permissive);
        FoldPlan plan =
            assign_fold_types(band_decomposition(t, cfg.force_standard), cfg.width);
        RibbonLayout layout = assemble_layout(plan);
        ValidationReport rep = validate_layout(layout);
        res.svg = render_svg(layout);
        json out = validation_report_json(rep, layout.width);
        out["framing_twists"] = layout.framing_twists;
        out["fold_line_count"] = layout.fold_lines.size();
        out["crossing_count"] = layout.crossings.size();
        res.output = out.dump(2) + "\n";
        if (!rep.all_pass()) res.exit_code = kCertificateFailure;
    } catch (const std::invalid_argument& e) {
        return cli_detail::input_error(e);
    }
    return res;
}

// Runs the certificate suite for one parameter set:
//   identity_check      braid-word identity behind the torus decomposition
//   pq_symmetry         Alexander agreement of the swapped-parameter braid
//   route_agreement     Alexander via Burau vs via the plan's diagram
//   plan_length_check   bound equals the plan length at w = 1
inline CmdResult cmd_verify(const RunConfig& cfg) {
    CmdResult res;
    try {
        TwistParams t = normalize_params(cfg.p, cfg.q, cfg.r, cfg.s, cfg.permissive);
        json out;
        bool failed = false;

        if (t.q >= 2) {
            auto [lhs, rhs] = torus_decomposition_identity(t.p, t.q);
            bool ok = braid_equal(lhs, rhs);
            out["identity_check"] = ok;
            failed |= !ok;
        } else {
            out["identity_check"] = nullptr;
        }

        json inv;
        BraidWord word = twisted_torus_braid(t.p, t.q, t.r, t.s);
        LaurentPolynomial alex = alexander_from_braid(word);
        out["braid"] = braid_report(word);
        out["alexander"] = laurent_report(alex);
        if (t.q >= 2) {
            bool ok = alexander_from_braid(twisted_torus_braid(t.q, t.p, t.r, t.s)) == alex;
            inv["pq_symmetry"] = ok;
            failed |= !ok;
        } else {
            inv["pq_symmetry"] = nullptr;
        }
        FoldPlan plan = assign_fold_types(band_decomposition(t), Rational(1));
        {
            bool ok = alexander_from_diagram(diagram_from_plan(plan)) == alex;
            inv["route_agreement"] = ok;
            failed |= !ok;
        }
        out["invariant_check"] = inv;
        {
            long long bound = ribbonlength_upper_bound(t.p, t.q, t.r, t.s, t.permissive);
            bool ok = plan_length(plan) == Rational(bound);
            out["plan_length_check"] = ok;
            failed |= !ok;
        }
        out["warnings"] = t.warnings();
        if (cfg.format == "text") {
            std::ostringstream os;
            os << "identity_check:    "
               << (out["identity_check"].is_null()
                       ? "skipped"
                       : (out["identity_check"].get<bool>() ? "pass" : "FAIL"))
               << "\n";
            os << "pq_symmetry:       "
               << (inv["pq_symmetry"].is_null() ? "skipped"
                                                : (inv["pq_symmetry"].get<bool>() ? "pass" : "FAIL"))
               << "\n";
            os << "route_agreement:   " << (inv["route_agreement"].get<bool>() ? "pass" : "FAIL")
               << "\n";
            os << "plan_length_check: " << (out["plan_length_check"].get<bool>() ? "pass" : "FAIL")
               << "\n";
            res.output = os.str();
        } else {
            res.output = out.dump(2) + "\n";
        }
        if (failed) res.exit_code = kCertificateFailure;
    } catch (const std::invalid_argument& e) {
        return cli_detail::input_error(e);
    }
    return res;
}

// Bound reports over the parameter grid, one entry per tuple in (p,q,r,s)
// order; invalid tuples carry their skip reason instead of a bound.
inline CmdResult cmd_sweep(const RunConfig& cfg) {
    CmdResult res;
    if (!cfg.range_p || !cfg.range_q || !cfg.range_r || !cfg.range_s) {
        res.exit_code = kInvalidInput;
        res.output = json{{"error", "sweep requires --range-p/q/r/s"}}.dump(2) + "\n";
        return res;
    }
    auto bad = [](const std::pair<int, int>& r) { return r.second < r.first; };
    if (bad(*cfg.range_p) || bad(*cfg.range_q) || bad(*cfg.range_r) || bad(*cfg.range_s)) {
        res.exit_code = kInvalidInput;
        res.output = json{{"error", "sweep ranges must be nonempty (A:B with A <= B)"}}.dump(2) + "\n";
        return res;
    }
    json arr = json::array();
    for (int p = cfg.range_p->first; p <= cfg.range_p->second; ++p)
        for (int q = cfg.range_q->first; q <= cfg.range_q->second; ++q)
            for (int r = cfg.range_r->first; r <= cfg.range_r->second; ++r)
                for (int s = cfg.range_s->first; s <= cfg.range_s->second; ++s) {
                    json raw{{"p", p}, {"q", q}, {"r", r}, {"s", s}};
                    try {
                        TwistParams t = normalize_params(p, q, r, s, cfg.permissive);
                        arr.push_back(json{
                            {"params", params_report(t)},
                            {"input", raw},
                            {"case", case_name(case_branch(t))},
                            {"rib_upper_bound",
                             ribbonlength_upper_bound(t.p, t.q, t.r, t.s, t.permissive)},
                            {"warnings", t.warnings()}});
                    } catch (const std::invalid_argument& e) {
                        arr.push_back(json{{"input", raw}, {"skipped", e.what()}});
                    }
                }
    if (cfg.format == "text") {
        std::ostringstream os;
        for (auto& e : arr) {
            if (e.contains("skipped"))
                os << e["input"]["p"] << "," << e["input"]["q"] << "," << e["input"]["r"] << ","
                   << e["input"]["s"] << "  skipped: " << e["skipped"].get<std::string>() << "\n";
            else
                os << e["params"]["p"] << "," << e["params"]["q"] << "," << e["params"]["r"] << ","
                   << e["params"]["s"] << "  " << e["case"].get<std::string>() << "  bound "
                   << e["rib_upper_bound"].get<long long>() << "\n";
        }
        res.output = os.str();
    } else {
        res.output = arr.dump(2) + "\n";
    }
    return res;
}

} // namespace ribbonfold

#endif
