#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <ribbonfold/braid.hpp>
#include <ribbonfold/garside.hpp>
#include <ribbonfold/invariants.hpp>
#include <ribbonfold/planner.hpp>

using namespace ribbonfold;

namespace {

long long theorem_bound(int p, int r, int s) {
    long long abs_s = s < 0 ? -s : s;
    return 2 * (std::max(p, r) + abs_s * r);
}

long long sharper_bound(int p, int r, int s) {
    long long abs_s = s < 0 ? -s : s;
    return 2 * (p + (abs_s - 1) * r);
}

} // namespace

TEST_CASE("normalize_params") {
    TwistParams a = normalize_params(3, 2, 2, 1);
    CHECK(a.p == 3);
    CHECK(a.q == 2);
    CHECK_FALSE(a.mirrored);
    CHECK_FALSE(a.swapped_pq);

    TwistParams b = normalize_params(2, 3, 2, 1);
    CHECK(b.p == 3);
    CHECK(b.q == 2);
    CHECK(b.swapped_pq);

    TwistParams c = normalize_params(3, -2, 2, 1);
    CHECK(c.p == 3);
    CHECK(c.q == 2);
    CHECK(c.s == -1);
    CHECK(c.mirrored);

    TwistParams d = normalize_params(-3, -2, 2, 1); // both signs flip: same knot
    CHECK(d.p == 3);
    CHECK(d.q == 2);
    CHECK(d.s == 1);
    CHECK_FALSE(d.mirrored);

    CHECK_THROWS_WITH(normalize_params(4, 2, 2, 1),
                      Catch::Matchers::ContainsSubstring("link, not knot"));
    CHECK_THROWS_AS(normalize_params(3, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(normalize_params(3, 2, 5, 1), std::invalid_argument);
    CHECK_THROWS_WITH(normalize_params(3, 1, 2, 1),
                      Catch::Matchers::ContainsSubstring("unknot-based"));
    CHECK(normalize_params(3, 1, 2, 1, true).permissive);

    CHECK(normalize_params(3, 2, 3, 1).warn_cable);
    CHECK(normalize_params(5, 2, 4, 1).warn_torus_or_trivial);
    CHECK_FALSE(normalize_params(5, 2, 3, 1).warn_cable);
}

TEST_CASE("case branches") {
    CHECK(case_branch(normalize_params(5, 2, 3, 1)) == CaseBranch::Reduced); // r = p-q
    CHECK(case_branch(normalize_params(3, 2, 2, 1)) == CaseBranch::Standard);
    CHECK(case_branch(normalize_params(3, 2, 4, 1)) == CaseBranch::Extended);
    CHECK(case_branch(normalize_params(3, 2, 3, 1)) == CaseBranch::Standard); // r = p
}

TEST_CASE("band decomposition per case") {
    WeightedBandDiagram ext = band_decomposition(normalize_params(3, 2, 4, 1));
    REQUIRE(ext.bands.size() == 4);
    CHECK(ext.bands[0].weight == 1); // r-p
    CHECK(ext.bands[1].weight == 1); // p+q-r
    CHECK(ext.bands[2].weight == 2); // r-q
    CHECK(ext.bands[3].weight == 4);
    CHECK(ext.bands[3].twist_box == 1);
    CHECK(ext.lower_weight() == 4); // = r

    WeightedBandDiagram std_ = band_decomposition(normalize_params(3, 2, 2, 1));
    REQUIRE(std_.bands.size() == 4);
    CHECK(std_.bands[0].weight == 1);
    CHECK(std_.bands[1].weight == 2);
    CHECK(std_.bands[2].weight == 2);
    CHECK(std_.bands[2].twist_box == 1);
    CHECK(std_.bands[3].weight == 1);
    CHECK_FALSE(std_.bands[3].twist_box.has_value());
    CHECK(std_.lower_weight() == 3); // = p

    WeightedBandDiagram red = band_decomposition(normalize_params(5, 2, 3, 2));
    REQUIRE(red.bands.size() == 3); // p-q-r = 0 omitted
    CHECK(red.bands[0].weight == 3);
    CHECK(red.bands[0].twist_box == 2);
    CHECK(red.bands[1].weight == 2);
    CHECK(red.bands[2].weight == 5);
    CHECK(red.lower_weight() == 5); // = p
}

TEST_CASE("fold type assignment and lengths") {
    FoldPlan ext = assign_fold_types(band_decomposition(normalize_params(3, 2, 4, 1)), Rational(1));
    CHECK(plan_length(ext) == Rational(16)); // 2(r + |s| r)
    CHECK(ext.entries[0].fold == FoldType::T1);
    CHECK(ext.entries[1].fold == FoldType::T2);
    CHECK(ext.entries[2].fold == FoldType::T3);
    CHECK(ext.entries[3].fold == FoldType::T4);

    FoldPlan std_ = assign_fold_types(band_decomposition(normalize_params(3, 2, 2, 1)), Rational(1));
    CHECK(plan_length(std_) == Rational(10)); // 2(p + |s| r)
    REQUIRE(std_.entries.size() == 4);
    CHECK(std_.entries[0].fold == FoldType::T1);
    CHECK(std_.entries[0].weight == 1);
    CHECK(std_.entries[1].fold == FoldType::T3);
    CHECK(std_.entries[1].weight == 2);
    CHECK(std_.entries[2].fold == FoldType::T4);
    CHECK(std_.entries[2].twist_box == 1);
    CHECK(std_.entries[3].fold == FoldType::Direct);
    CHECK(std_.entries[3].per_strand_length == Rational(0));

    FoldPlan red = assign_fold_types(band_decomposition(normalize_params(5, 2, 3, 2)), Rational(1));
    CHECK(plan_length(red) == Rational(16)); // 2(p + (|s|-1) r)
    CHECK(red.entries[0].fold == FoldType::T3T4Combined);
    CHECK(red.entries[0].per_strand_length == Rational(4)); // 2|s|
    CHECK(red.entries[0].twist_count == 2);

    // negative s mirrors folds but not lengths
    FoldPlan neg = assign_fold_types(band_decomposition(normalize_params(5, 2, 3, -2)), Rational(1));
    CHECK(plan_length(neg) == Rational(16));
    CHECK(neg.entries[0].twist_count == -2);
}

TEST_CASE("plan length scales linearly in the width") {
    FoldPlan half =
        assign_fold_types(band_decomposition(normalize_params(3, 2, 2, 1)), Rational(1, 2));
    CHECK(plan_length(half) == Rational(5));

    // all-direct plan measures zero
    FoldPlan plan;
    plan.width = Rational(2);
    plan.entries.push_back({5, BandRegion::Upper, FoldType::Direct, Rational(0), 0, {}, "x"});
    CHECK(plan_length(plan) == Rational(0));
}

TEST_CASE("ribbonlength upper bound values") {
    CHECK(ribbonlength_upper_bound(3, 2, 4, 2) == 24); // 2(4 + 2*4)
    CHECK(ribbonlength_upper_bound(5, 2, 3, 1) == 10); // 2(5 + 0)
    for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {5, 3}, {7, 4}, {8, 3}})
        CHECK(ribbonlength_upper_bound(p, q, 1, 1) == 2 * p);
}

TEST_CASE("bound equals formula and plan length on the desk grid") {
    for (int p = 3; p <= 12; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int r = 1; r < p + q; ++r)
                for (int s = -4; s <= 4; ++s) {
                    if (s == 0) continue;
                    TwistParams t = normalize_params(p, q, r, s);
                    long long bound = ribbonlength_upper_bound(p, q, r, s);
                    FoldPlan plan = assign_fold_types(band_decomposition(t), Rational(1));
                    CHECK(Rational(bound) == plan_length(plan));
                    if (r <= p - q)
                        CHECK(bound == sharper_bound(p, r, s));
                    else
                        CHECK(bound == theorem_bound(p, r, s));
                    // sign symmetry and monotonicity
                    CHECK(bound == ribbonlength_upper_bound(p, q, r, -s));
                    if (s >= 1) CHECK(ribbonlength_upper_bound(p, q, r, s + 1) >= bound);
                    // the sharper bound strictly beats the generic one
                    if (r <= p - q) CHECK(bound < 2 * (p + std::abs(s) * r));
                }
        }
}

TEST_CASE("force_standard exposes the non-sharpened plan") {
    TwistParams t = normalize_params(5, 2, 3, 2);
    FoldPlan forced = assign_fold_types(band_decomposition(t, true), Rational(1));
    CHECK(forced.branch == CaseBranch::Standard);
    CHECK(plan_length(forced) == Rational(22)); // 2(p + |s| r)
    CHECK(plan_length(forced) > plan_length(assign_fold_types(band_decomposition(t), Rational(1))));
}

TEST_CASE("reassembled braids preserve the knot type") {
    // STANDARD reassembly is the torus identity: exact braid equality
    for (auto [p, q, r, s] : {std::tuple{3, 2, 2, 1}, {4, 3, 4, -1}, {5, 3, 4, 2}}) {
        TwistParams t = normalize_params(p, q, r, s);
        BraidWord re = reassembled_braid(band_decomposition(t));
        CHECK(braid_equal(re, twisted_torus_braid(p, q, r, s)));
    }
    // REDUCED and EXTENDED reassemblies agree on the Alexander polynomial
    for (int p = 3; p <= 7; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int r = 1; r < p + q; ++r)
                for (int s : {1, -1, 2}) {
                    BraidWord ctor = twisted_torus_braid(p, q, r, s);
                    if (ctor.size() > 70) continue;
                    TwistParams t = normalize_params(p, q, r, s);
                    BraidWord re = reassembled_braid(band_decomposition(t));
                    CHECK(closure_component_count(re) == 1);
                    CHECK(alexander_from_braid(re) == alexander_from_braid(ctor));
                }
        }
}

TEST_CASE("twisted torus constructions agree across the parameter swap") {
    for (int p = 3; p <= 6; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int r = 1; r < p + q; ++r)
                for (int s : {1, -2}) {
                    CHECK(alexander_from_braid(twisted_torus_braid(p, q, r, s)) ==
                          alexander_from_braid(twisted_torus_braid(q, p, r, s)));
                }
        }
}

TEST_CASE("the window presentation carries the torus knot") {
    // closure of the (p past q) block transposition is T(p,q)
    for (auto [p, q] : {std::pair{2, 3}, {3, 4}, {5, 2}, {5, 3}, {4, 5}}) {
        BraidWord bc = block_transposition_word(0, p, q, p + q);
        CHECK(closure_component_count(bc) == 1);
        CHECK(alexander_from_braid(bc) == alexander_torus_oracle(p, q));
    }
}

TEST_CASE("window twist boxes match the classical form at every offset") {
    for (int p = 3; p <= 5; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int r = 1; r <= p; ++r)
                for (int s : {1, -1, 2}) {
                    LaurentPolynomial truth =
                        alexander_from_braid(twisted_torus_braid(p, q, r, s));
                    for (int off = 0; off + r <= p + q; off += 2)
                        CHECK(alexander_from_braid(torus_window_braid(p, q, r, s, off)) == truth);
                    CHECK(alexander_from_braid(torus_window_braid(q, p, r, s)) == truth);
                }
        }
}

TEST_CASE("the extended form agrees with the window presentation") {
    for (int p = 3; p <= 6; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int r = p + 1; r < p + q; ++r)
                for (int s : {1, -1, 2, -3}) {
                    CHECK(alexander_from_braid(extended_band_braid(p, q, r, s)) ==
                          alexander_from_braid(torus_window_braid(p, q, r, s)));
                }
        }
}
