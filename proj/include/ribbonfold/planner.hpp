#ifndef RIBBONFOLD_PLANNER_HPP
#define RIBBONFOLD_PLANNER_HPP

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"
#include "rational.hpp"

namespace ribbonfold {

// Normalized twisted-torus parameters. Mirror symmetry folds q < 0 into
// (q, s) -> (-q, -s); the p <-> q swap brings the pair into 2 <= q < p. Both
// transformations preserve ribbonlength, and the record keeps track of which
// were applied.
struct TwistParams {
    int p = 0, q = 0, r = 0, s = 0;
    bool mirrored = false;
    bool swapped_pq = false;
    bool permissive = false;            // q = 1 accepted for exploration, uncertified
    bool warn_cable = false;            // r = p: cable/torus degeneration
    bool warn_torus_or_trivial = false; // r multiple of q: torus or trivial degeneration

    std::vector<std::string> warnings() const {
        std::vector<std::string> w;
        if (permissive && q == 1) w.push_back("unknot-based: torus factor trivial (q = 1); bound is uncertified");
        if (warn_cable) w.push_back("degenerate: r = p, knot is a cable or torus knot");
        if (warn_torus_or_trivial) w.push_back("degenerate: r is a multiple of q, knot is a torus knot or trivial");
        return w;
    }
};

inline TwistParams normalize_params(int p, int q, int r, int s, bool permissive = false) {
    if (p == 0 || q == 0) throw std::invalid_argument("p and q must be nonzero");
    TwistParams t;
    if (p < 0) { p = -p; q = -q; } // simultaneous sign flip reverses orientation only
    if (q < 0) { q = -q; s = -s; t.mirrored = true; }
    if (q > p) { std::swap(p, q); t.swapped_pq = true; }
    if (std::gcd(p, q) != 1) throw std::invalid_argument("link, not knot: gcd(p,q) != 1");
    if (s == 0) throw std::invalid_argument("twist count s must be nonzero");
    if (r < 1 || r >= p + q) throw std::invalid_argument("r must satisfy 1 <= r < p+q");
    if (q == 1) {
        if (!permissive)
            throw std::invalid_argument(
                "unknot-based: torus factor trivial (q = 1 after normalization)");
        if (p == 1) throw std::invalid_argument("p = q = 1 has no braid presentation");
        t.permissive = true;
    }
    t.p = p; t.q = q; t.r = r; t.s = s;
    t.warn_cable = (r == p);
    t.warn_torus_or_trivial = (r % q == 0);
    return t;
}

enum class CaseBranch { Reduced, Standard, Extended };

inline const char* case_name(CaseBranch c) {
    switch (c) {
        case CaseBranch::Reduced: return "REDUCED";
        case CaseBranch::Standard: return "STANDARD";
        default: return "EXTENDED";
    }
}

// The three construction regimes of the length bounds. REDUCED (r <= p-q)
// yields the sharper bound and wins whenever it applies.
inline CaseBranch case_branch(const TwistParams& t) {
    if (t.r <= t.p - t.q) return CaseBranch::Reduced;
    if (t.r <= t.p) return CaseBranch::Standard;
    return CaseBranch::Extended;
}

enum class BandRegion { Upper, Lower };
enum class FoldType { T1, T2, T3, T4, T3T4Combined, Direct };

inline const char* fold_name(FoldType f) {
    switch (f) {
        case FoldType::T1: return "T1";
        case FoldType::T2: return "T2";
        case FoldType::T3: return "T3";
        case FoldType::T4: return "T4";
        case FoldType::T3T4Combined: return "T3T4_COMBINED";
        default: return "DIRECT";
    }
}

struct Band {
    int weight;
    BandRegion region;
    std::optional<int> twist_box; // s for boxed bands, absent otherwise
    std::string role;
};

struct WeightedBandDiagram {
    TwistParams params;
    CaseBranch branch;
    std::vector<Band> bands;

    int lower_weight() const {
        int sum = 0;
        for (auto& b : bands)
            if (b.region == BandRegion::Lower) sum += b.weight;
        return sum;
    }
};

// Decompose the construction into weighted bands. Zero-weight bands are
// omitted. `force_standard` exposes the non-sharpened construction for
// parameters in the REDUCED range.
inline WeightedBandDiagram band_decomposition(const TwistParams& t, bool force_standard = false) {
    WeightedBandDiagram d;
    d.params = t;
    d.branch = case_branch(t);
    if (force_standard && d.branch == CaseBranch::Reduced) d.branch = CaseBranch::Standard;
    const int p = t.p, q = t.q, r = t.r, s = t.s;
    auto push = [&](int weight, BandRegion region, std::optional<int> box, const char* role) {
        if (weight > 0) d.bands.push_back({weight, region, box, role});
    };
    switch (d.branch) {
        case CaseBranch::Extended:
            push(r - p, BandRegion::Lower, std::nullopt, "extra-strand bunch");
            push(p + q - r, BandRegion::Lower, std::nullopt, "middle bunch");
            push(r - q, BandRegion::Lower, std::nullopt, "merged bunch");
            push(r, BandRegion::Upper, s, "twist box");
            break;
        case CaseBranch::Standard:
            push(p - q, BandRegion::Lower, std::nullopt, "untwisted torus bunch");
            push(q, BandRegion::Lower, std::nullopt, "twisted torus bunch");
            push(r, BandRegion::Upper, s, "twist box");
            push(p - r, BandRegion::Upper, std::nullopt, "pass-through");
            break;
        case CaseBranch::Reduced:
            push(r, BandRegion::Lower, s, "shifted twist box");
            push(p - q - r, BandRegion::Lower, std::nullopt, "untwisted torus bunch");
            push(q, BandRegion::Lower, std::nullopt, "twisted torus bunch");
            push(p, BandRegion::Upper, std::nullopt, "pass-through");
            break;
    }
    return d;
}

struct FoldPlanEntry {
    int weight;
    BandRegion region;
    FoldType fold;
    Rational per_strand_length; // in units of w
    int twist_count;            // signed full twists carried at this fold, per strand
    std::optional<int> twist_box;
    std::string role;
};

struct FoldPlan {
    TwistParams params;
    CaseBranch branch;
    Rational width;
    std::vector<FoldPlanEntry> entries;
};

// Assign the fold type of each band and its exact length share: types 1-3
// consume 2w per strand, type 4 and the combined type consume 2w|s|, directly
// connected bands consume nothing. Negative s mirrors every fold direction;
// lengths depend on |s| only.
inline FoldPlan assign_fold_types(const WeightedBandDiagram& d, const Rational& width) {
    if (!(width > Rational(0))) throw std::invalid_argument("width must be positive");
    FoldPlan plan;
    plan.params = d.params;
    plan.branch = d.branch;
    plan.width = width;
    const int s = d.params.s;
    const int abs_s = s < 0 ? -s : s;
    for (const auto& band : d.bands) {
        FoldPlanEntry e;
        e.weight = band.weight;
        e.region = band.region;
        e.twist_box = band.twist_box;
        e.role = band.role;
        if (band.twist_box) {
            e.fold = d.branch == CaseBranch::Reduced ? FoldType::T3T4Combined : FoldType::T4;
            e.per_strand_length = Rational(2 * abs_s);
            e.twist_count = s;
        } else if (band.role == "pass-through") {
            e.fold = FoldType::Direct;
            e.per_strand_length = Rational(0);
            e.twist_count = 0;
        } else if (band.role == "twisted torus bunch") {
            e.fold = FoldType::T3;
            e.per_strand_length = Rational(2);
            e.twist_count = 1;
        } else if (band.role == "middle bunch") {
            e.fold = FoldType::T2;
            e.per_strand_length = Rational(2);
            e.twist_count = 0;
        } else if (d.branch == CaseBranch::Extended && band.role == "merged bunch") {
            e.fold = FoldType::T3;
            e.per_strand_length = Rational(2);
            e.twist_count = 1;
        } else {
            e.fold = FoldType::T1;
            e.per_strand_length = Rational(2);
            e.twist_count = 0;
        }
        plan.entries.push_back(std::move(e));
    }
    return plan;
}

// Exact total length: w * sum of weight * per-strand length.
inline Rational plan_length(const FoldPlan& plan) {
    Rational sum(0);
    for (const auto& e : plan.entries) sum += Rational(e.weight) * e.per_strand_length;
    return plan.width * sum;
}

// The certified upper bound on ribbonlength. Computed through the fold plan at
// w = 1, so it equals plan_length(assign_fold_types(band_decomposition(...), 1))
// by construction; closed forms per case are
//   REDUCED  2(p + (|s|-1) r),  STANDARD  2(p + |s| r),  EXTENDED  2(r + |s| r).
inline long long ribbonlength_upper_bound(int p, int q, int r, int s, bool permissive = false) {
    TwistParams t = normalize_params(p, q, r, s, permissive);
    FoldPlan plan = assign_fold_types(band_decomposition(t), Rational(1));
    Rational len = plan_length(plan);
    return len.num(); // integral at w = 1
}

// Braid word realizing the band diagram, twists placed where the folds carry
// them. STANDARD spells the torus word through its twisted-block identity;
// REDUCED has the twist box slid to the top, shifted right by q strands;
// EXTENDED is the three-bunch reversal form.
inline BraidWord reassembled_braid(const WeightedBandDiagram& d) {
    const int p = d.params.p, q = d.params.q, r = d.params.r, s = d.params.s;
    switch (d.branch) {
        case CaseBranch::Standard: {
            BraidWord w = full_twist_word(q, 1, 0, p);
            w = concat(w, block_transposition_word(0, q, p - q, p));
            return concat(w, full_twist_word(r, s, 0, p));
        }
        case CaseBranch::Reduced: {
            BraidWord w = full_twist_word(r, s, q, p);
            w = concat(w, full_twist_word(q, 1, 0, p));
            return concat(w, block_transposition_word(0, q, p - q, p));
        }
        default:
            return extended_band_braid(p, q, r, s);
    }
}

} // namespace ribbonfold

#endif
