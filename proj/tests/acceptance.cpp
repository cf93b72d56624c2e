// Acceptance suite: runs every primary criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include <ribbonfold/braid.hpp>
#include <ribbonfold/cli.hpp>
#include <ribbonfold/diagram.hpp>
#include <ribbonfold/garside.hpp>
#include <ribbonfold/geometry.hpp>
#include <ribbonfold/invariants.hpp>
#include <ribbonfold/planner.hpp>

using namespace ribbonfold;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, bool ok, double elapsed, const std::string& detail = "") {
    std::printf("%s  %-38s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), elapsed,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

template <typename F>
void for_desk_grid(int max_p, int max_abs_s, F&& f) {
    for (int p = 3; p <= max_p; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int r = 1; r < p + q; ++r)
                for (int s = -max_abs_s; s <= max_abs_s; ++s) {
                    if (s == 0) continue;
                    f(p, q, r, s);
                }
        }
}

} // namespace

int main() {
    // 1. Formula reproduction over the full grid, exact, under one second.
    {
        auto start = Clock::now();
        bool ok = true;
        long count = 0;
        for_desk_grid(12, 4, [&](int p, int q, int r, int s) {
            ++count;
            long long bound = ribbonlength_upper_bound(p, q, r, s);
            long long abs_s = s < 0 ? -s : s;
            long long expect = r <= p - q ? 2 * (p + (abs_s - 1) * r)
                                          : 2 * (std::max(p, r) + abs_s * r);
            if (bound != expect) ok = false;
        });
        double el = seconds_since(start);
        report("formula reproduction", ok && el < 1.0, el, std::to_string(count) + " tuples");
    }

    // 2. Torus specialization: r = 1, s = 1 gives 2p.
    {
        auto start = Clock::now();
        bool ok = true;
        for (int p = 3; p <= 12; ++p)
            for (int q = 2; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                if (ribbonlength_upper_bound(p, q, 1, 1) != 2 * p) ok = false;
            }
        report("torus specialization bound 2p", ok, seconds_since(start));
    }

    // 3. Bound equals the plan length at w = 1 over the whole grid, exactly.
    {
        auto start = Clock::now();
        bool ok = true;
        for_desk_grid(12, 4, [&](int p, int q, int r, int s) {
            TwistParams t = normalize_params(p, q, r, s);
            FoldPlan plan = assign_fold_types(band_decomposition(t), Rational(1));
            if (plan_length(plan) != Rational(ribbonlength_upper_bound(p, q, r, s))) ok = false;
        });
        report("bound-construction agreement", ok, seconds_since(start));
    }

    // 4. The braid-word identity via Garside normal forms, p up to 8.
    {
        auto start = Clock::now();
        bool ok = true;
        for (int p = 3; p <= 8; ++p)
            for (int q = 2; q < p; ++q) {
                auto [lhs, rhs] = torus_decomposition_identity(p, q);
                if (!braid_equal(lhs, rhs)) ok = false;
            }
        double el = seconds_since(start);
        report("braid-word identity (Garside)", ok && el < 10.0, el);
    }

    // 5. Burau route matches the closed-form torus oracle.
    {
        auto start = Clock::now();
        bool ok = true;
        for (int p = 3; p <= 7; ++p)
            for (int q = 2; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                if (alexander_from_braid(torus_braid(p, q)) != alexander_torus_oracle(p, q))
                    ok = false;
            }
        report("invariant oracle agreement", ok, seconds_since(start));
    }

    // 6. p <-> q symmetry of the constructions (Alexander certificates).
    {
        auto start = Clock::now();
        bool ok = true;
        long count = 0;
        for_desk_grid(7, 2, [&](int p, int q, int r, int s) {
            ++count;
            if (alexander_from_braid(twisted_torus_braid(p, q, r, s)) !=
                alexander_from_braid(twisted_torus_braid(q, p, r, s)))
                ok = false;
        });
        report("p<->q symmetry", ok, seconds_since(start), std::to_string(count) + " tuples");
    }

    // 7. Construction preserves knot type: plan-diagram route vs braid route
    //    for all grid tuples within the 60-crossing budget, under a minute.
    {
        auto start = Clock::now();
        bool ok = true;
        long count = 0;
        for_desk_grid(12, 4, [&](int p, int q, int r, int s) {
            BraidWord ctor = twisted_torus_braid(p, q, r, s);
            TwistParams t = normalize_params(p, q, r, s);
            WeightedBandDiagram d = band_decomposition(t);
            BraidWord re = reassembled_braid(d);
            if (ctor.size() > 60 || re.size() > 60) return;
            ++count;
            FoldPlan plan = assign_fold_types(d, Rational(1));
            if (alexander_from_diagram(diagram_from_plan(plan)) != alexander_from_braid(ctor))
                ok = false;
        });
        double el = seconds_since(start);
        report("knot type preserved (two routes)", ok && el < 60.0, el,
               std::to_string(count) + " tuples");
    }

    // 8. Geometry validity: every generated layout passes validation; the
    //    three negative fixtures fail in their expected class.
    {
        auto start = Clock::now();
        bool ok = true;
        long count = 0;
        for_desk_grid(7, 2, [&](int p, int q, int r, int s) {
            ++count;
            TwistParams t = normalize_params(p, q, r, s);
            RibbonLayout lay = assemble_layout(assign_fold_types(band_decomposition(t), Rational(1)));
            if (!validate_layout(lay).all_pass()) ok = false;
        });
        {
            TwistParams t = normalize_params(3, 2, 2, 1);
            RibbonLayout base =
                assemble_layout(assign_fold_types(band_decomposition(t), Rational(1)));

            RibbonLayout bad1 = base;
            bad1.fold_lines.push_back(bad1.fold_lines.front());
            ValidationReport r1 = validate_layout(bad1);
            if (r1.fold_lines_disjoint || !r1.crossings_consistent) ok = false;

            RibbonLayout bad2;
            bad2.width = Rational(1);
            auto seg = [&](long arc, long long ax, long long ay, long long bx, long long by) {
                bad2.segments.push_back(
                    {-1, arc, 0, {Rational(ax), Rational(ay)}, {Rational(bx), Rational(by)}, 0,
                     true, false});
            };
            seg(0, 0, 0, 4, 4);
            seg(1, 0, 4, 4, 0);
            seg(2, -1, 2, 5, 2);
            bad2.crossings.push_back({0, 1, {Rational(2), Rational(2)}});
            bad2.crossings.push_back({1, 2, {Rational(2), Rational(2)}});
            bad2.crossings.push_back({2, 0, {Rational(2), Rational(2)}});
            ValidationReport r2 = validate_layout(bad2);
            if (r2.crossings_consistent || !r2.fold_lines_disjoint) ok = false;

            RibbonLayout bad3 = base;
            bad3.expected_length += Rational(1);
            ValidationReport r3 = validate_layout(bad3);
            if (r3.length_matches || !r3.fold_lines_disjoint || !r3.crossings_consistent)
                ok = false;
        }
        report("geometry validity", ok, seconds_since(start),
               std::to_string(count) + " layouts + 3 fixtures");
    }

    // 9. Mirror property: normalized Alexander is mirror-invariant.
    {
        auto start = Clock::now();
        bool ok = true;
        for_desk_grid(7, 2, [&](int p, int q, int r, int s) {
            BraidWord b = twisted_torus_braid(p, q, r, s);
            if (alexander_from_braid(mirror_braid(b)) != alexander_from_braid(b)) ok = false;
        });
        report("mirror invariance", ok, seconds_since(start));
    }

    // 10. Determinism of sweep and render.
    {
        auto start = Clock::now();
        bool ok = true;
        RunConfig sweep;
        sweep.range_p = {{3, 6}};
        sweep.range_q = {{2, 4}};
        sweep.range_r = {{1, 5}};
        sweep.range_s = {{-2, 2}};
        CmdResult s1 = cmd_sweep(sweep);
        CmdResult s2 = cmd_sweep(sweep);
        if (s1.output != s2.output || s1.exit_code != kOk) ok = false;

        RunConfig render;
        render.p = 5; render.q = 2; render.r = 3; render.s = 2;
        CmdResult r1 = cmd_render(render);
        CmdResult r2 = cmd_render(render);
        if (r1.svg != r2.svg || r1.output != r2.output || r1.exit_code != kOk) ok = false;
        report("determinism (sweep, render)", ok, seconds_since(start));
    }

    std::printf("%s: %d criterion failure%s\n", failures == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED",
                failures, failures == 1 ? "" : "s");
    return failures;
}
