#ifndef RIBBONFOLD_GEOMETRY_HPP
#define RIBBONFOLD_GEOMETRY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"
#include "diagram.hpp"
#include "planner.hpp"
#include "rational.hpp"

namespace ribbonfold {

// ---------------------------------------------------------------------------
// Fold templates
// ---------------------------------------------------------------------------

// Parameterized planar fold template. Fold-line angles are in degrees against
// the band direction; core lengths are exact rationals in units of the width.
// Types 1-3 are the 2w turn templates (type 3 carrying one full twist at the
// fold, type 2 the alternative crease placement used next to a type-1 band);
// type 4 and the combined type stack |s|-1 roll layers onto the type-3 turn
// and consume 2w|s|. Templates for negative s are mirror images.
struct FoldTemplate {
    FoldType type = FoldType::Direct;
    Rational width = Rational(1);
    std::vector<int> fold_angles_deg;
    std::vector<Rational> core_lengths; // in units of w
    int roll_layers = 0;
    int twist_count = 0;

    Rational core_length() const {
        Rational sum(0);
        for (auto& c : core_lengths) sum += c;
        return sum * width;
    }
};

inline FoldTemplate layout_fold_type(FoldType type, const Rational& w,
                                     std::optional<int> s = std::nullopt) {
    if (!(w > Rational(0))) throw std::invalid_argument("fold template needs w > 0");
    FoldTemplate t;
    t.type = type;
    t.width = w;
    switch (type) {
        case FoldType::T1:
            t.fold_angles_deg = {45, 135};
            t.core_lengths = {Rational(2)};
            break;
        case FoldType::T2:
            t.fold_angles_deg = {135, 45};
            t.core_lengths = {Rational(2)};
            break;
        case FoldType::T3:
            t.fold_angles_deg = {45, 135};
            t.core_lengths = {Rational(2)};
            t.twist_count = 1;
            break;
        case FoldType::T4:
        case FoldType::T3T4Combined: {
            if (!s) throw std::invalid_argument("type-4 template needs the twist count s");
            if (*s == 0) throw std::invalid_argument("type-4 template needs s != 0");
            int abs_s = *s < 0 ? -*s : *s;
            t.fold_angles_deg.push_back(45);
            for (int k = 0; k < abs_s - 1; ++k) t.fold_angles_deg.push_back(90);
            t.fold_angles_deg.push_back(135);
            t.core_lengths.assign(static_cast<size_t>(abs_s), Rational(2));
            t.roll_layers = abs_s - 1;
            t.twist_count = *s;
            if (*s < 0)
                for (auto& a : t.fold_angles_deg) a = -a;
            break;
        }
        case FoldType::Direct:
            break;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Layout data
// ---------------------------------------------------------------------------

struct LayoutPoint {
    Rational x, y;
    bool operator==(const LayoutPoint& o) const { return x == o.x && y == o.y; }
};

struct LayoutSegment {
    long band = -1;   // plan entry index, -1 for shared routing
    long arc = 0;     // lane / closure-arc id
    long seq = 0;     // emission order within the arc
    LayoutPoint a, b;
    int layer = 0;
    bool connector = false; // excluded from length accounting
    bool interface_stub = false;
};

struct LayoutFoldLine {
    long band = -1;
    int angle_deg = 0;
    LayoutPoint a, b;
};

struct LayoutCrossing {
    size_t over_seg = 0;
    size_t under_seg = 0;
    LayoutPoint at;
};

struct RibbonLayout {
    Rational width = Rational(1);
    Rational expected_length = Rational(0);
    long long framing_twists = 0;
    std::vector<LayoutSegment> segments;
    std::vector<LayoutFoldLine> fold_lines;
    std::vector<LayoutCrossing> crossings;
};

// Count and exact sum of the non-connector core runs. All counted runs are
// axis-parallel, so lengths stay rational.
inline Rational measured_core_length(const RibbonLayout& layout) {
    Rational sum(0);
    for (const auto& s : layout.segments) {
        if (s.connector) continue;
        if (s.a.x == s.b.x)
            sum += abs(s.b.y - s.a.y);
        else if (s.a.y == s.b.y)
            sum += abs(s.b.x - s.a.x);
        else
            throw std::logic_error("counted core segment is not axis-parallel");
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

// One fold unit per strand of each band, grouped by contiguous position
// ranges at the braid boundary.
struct FoldUnitSpec {
    int count = 0;
    FoldType type = FoldType::Direct;
    int twist = 0;  // signed twists for accordion units
    long band = -1; // plan entry index
};

namespace layout_detail {

class Builder {
public:
    Builder(const Rational& w) : w_(w) {}

    Rational wx(long long k) const { return Rational(k) * w_; } // k * w

    void seg(long band, long arc, const LayoutPoint& a, const LayoutPoint& b, int layer,
             bool connector, bool stub = false) {
        if (a == b) return;
        layout_.segments.push_back({band, arc, seq_counter_[arc]++, a, b, layer, connector, stub});
    }
    size_t last_seg() const { return layout_.segments.size() - 1; }

    void crease(long band, int angle, const LayoutPoint& a, const LayoutPoint& b) {
        layout_.fold_lines.push_back({band, angle, a, b});
    }

    // Diagonal crease centered on a core point, spanning the band width.
    // Angles 45 / -135 lie along the "/" diagonal, 135 / -45 along "\".
    void diag_crease(long band, int angle, const Rational& cx, const Rational& cy) {
        Rational h = w_ / Rational(2);
        int a = angle < 0 ? angle + 180 : angle;
        if (a == 45)
            crease(band, angle, {cx - h, cy - h}, {cx + h, cy + h});
        else
            crease(band, angle, {cx - h, cy + h}, {cx + h, cy - h});
    }

    RibbonLayout layout_;
    std::map<long, long> seq_counter_;
    Rational w_;
};

} // namespace layout_detail

// Build the flat layout: a schematic of the braid word (routing wires carrying
// every crossing), interface stubs at the two braid boundaries, one fold unit
// per strand of each band (the exact 2w / 2w|s| runs that the length
// accounting counts), and nested closure wiring that introduces no extra
// crossings. Fold lines are the template creases; wires and stubs are flagged
// connectors and excluded from measurement.
inline RibbonLayout assemble_layout_parts(const Rational& w, const BraidWord& word,
                                          const std::vector<FoldUnitSpec>& bottom_units,
                                          const std::vector<FoldUnitSpec>& top_units,
                                          const Rational& expected_length,
                                          long long framing_twists) {
    using layout_detail::Builder;
    if (!(w > Rational(0))) throw std::invalid_argument("layout needs w > 0");
    const int m = word.strands;
    {
        int bsum = 0, tsum = 0;
        for (auto& u : bottom_units) bsum += u.count;
        for (auto& u : top_units) tsum += u.count;
        if (bsum != m || tsum != m)
            throw std::invalid_argument("fold units must cover each strand exactly once");
    }
    Builder b(w);
    RibbonLayout& L = b.layout_;
    L.width = w;
    L.expected_length = expected_length;
    L.framing_twists = framing_twists;

    const Rational eps = w / Rational(100);
    const long long rows = static_cast<long long>(word.size());
    auto lane_x = [&](int j) { return b.wx(4LL * j); };
    const Rational y_top = Rational(0);
    const Rational y_braid_top = y_top - eps;
    const Rational y_braid_bot = y_braid_top - b.wx(2 * rows);
    const Rational y_bot = y_braid_bot - eps;

    // interface stubs at both braid boundaries
    for (int j = 0; j < m; ++j) {
        b.seg(-1, j, {lane_x(j), y_top}, {lane_x(j), y_braid_top}, 0, true, true);
        b.seg(-1, j, {lane_x(j), y_braid_bot}, {lane_x(j), y_bot}, 0, true, true);
    }

    // braid schematic: merge straight runs, one crossing cell per letter
    {
        std::vector<Rational> pending_y(static_cast<size_t>(m), y_braid_top);
        for (size_t t = 0; t < word.size(); ++t) {
            int g = word.letters[t];
            int li = (g > 0 ? g : -g) - 1, ri = li + 1;
            Rational yt = y_braid_top - b.wx(2 * static_cast<long long>(t));
            Rational yb = yt - b.wx(2);
            for (int j : {li, ri}) {
                b.seg(-1, j, {lane_x(j), pending_y[static_cast<size_t>(j)]}, {lane_x(j), yt}, 0,
                      true);
                pending_y[static_cast<size_t>(j)] = yb;
            }
            // left-to-right diagonal carries the strand from position li; our
            // sign convention puts it on top for a positive letter
            b.seg(-1, li, {lane_x(li), yt}, {lane_x(ri), yb}, g > 0 ? 1 : 0, true);
            size_t dl = b.last_seg();
            b.seg(-1, ri, {lane_x(ri), yt}, {lane_x(li), yb}, g > 0 ? 0 : 1, true);
            size_t dr = b.last_seg();
            LayoutPoint mid{(lane_x(li) + lane_x(ri)) / Rational(2), (yt + yb) / Rational(2)};
            if (g > 0)
                L.crossings.push_back({dl, dr, mid});
            else
                L.crossings.push_back({dr, dl, mid});
        }
        for (int j = 0; j < m; ++j)
            b.seg(-1, j, {lane_x(j), pending_y[static_cast<size_t>(j)]}, {lane_x(j), y_braid_bot},
                  0, true);
    }

    // per-lane unit types from the position ranges
    std::vector<FoldUnitSpec> bottom_of(static_cast<size_t>(m)), top_of(static_cast<size_t>(m));
    {
        int pos = 0;
        for (auto& u : bottom_units)
            for (int k = 0; k < u.count; ++k) bottom_of[static_cast<size_t>(pos++)] = u;
        pos = 0;
        for (auto& u : top_units)
            for (int k = 0; k < u.count; ++k) top_of[static_cast<size_t>(pos++)] = u;
    }

    const Rational y_units_top = y_bot;                  // bottom units below this
    const Rational y_units_floor = y_units_top - b.wx(2LL * (m + 1));
    auto bottom_unit_y = [&](int j) { return y_units_top - b.wx(2LL * (j + 1)); };
    auto bus_y = [&](int j) { return y_units_floor - b.wx(2LL * (j + 1)); };
    auto return_x = [&](int j) { return -b.wx(4LL * (j + 1) + 2); };
    auto top_bus_y = [&](int j) { return y_top + b.wx(2LL * (j + 1)); };

    // Accordion of |twist| counted 2w runs between x-2w and x, starting at
    // height y0 on the given side and dropping by delta per roll layer.
    // Returns the exit point.
    auto accordion = [&](long band, long arc, const Rational& x, const Rational& y0, int twist,
                         bool start_left) {
        int abs_s = twist < 0 ? -twist : twist;
        Rational delta = w / Rational(abs_s + 1);
        Rational xl = x - b.wx(2), xr = x;
        LayoutPoint start{start_left ? xl : xr, y0};
        b.diag_crease(band, twist >= 0 ? 45 : -45, start.x, start.y);
        LayoutPoint cur = start;
        for (int k = 0; k < abs_s; ++k) {
            Rational y = y0 - delta * Rational(k);
            bool leftward = (k % 2 == 0) == start_left;
            LayoutPoint from{leftward ? xl : xr, y};
            LayoutPoint to{leftward ? xr : xl, y};
            b.seg(band, arc, from, to, k, false); // counted run
            if (k + 1 < abs_s) {
                LayoutPoint drop{to.x, y - delta};
                b.seg(band, arc, to, drop, k, true);
                // roll crease between the stacked layers
                Rational third = delta / Rational(3);
                b.crease(band, 90, {to.x, y - delta / Rational(2) - third},
                         {to.x, y - delta / Rational(2) + third});
                cur = drop;
            } else {
                cur = to;
            }
        }
        // when the exit shares the entry side (even |s|) the closing crease
        // runs parallel to the opening one, keeping the creases disjoint
        int exit_angle = cur.x == start.x ? (twist >= 0 ? 45 : -45) : (twist >= 0 ? 135 : -135);
        b.diag_crease(band, exit_angle, cur.x, cur.y);
        return cur;
    };

    for (int j = 0; j < m; ++j) {
        const long arc = j;
        const Rational xj = lane_x(j);
        const Rational corridor = xj - b.wx(2);
        const FoldUnitSpec& bu = bottom_of[static_cast<size_t>(j)];
        const FoldUnitSpec& tu = top_of[static_cast<size_t>(j)];
        const Rational yu = bottom_unit_y(j);

        // braid bottom down to the bottom unit
        b.seg(-1, arc, {xj, y_bot}, {xj, yu}, 0, true);
        LayoutPoint exitp{corridor, yu};
        switch (bu.type) {
            case FoldType::T1:
            case FoldType::T3: {
                b.diag_crease(bu.band, 45, xj, yu);
                b.seg(bu.band, arc, {xj, yu}, {corridor, yu}, 0, false); // counted 2w run
                b.diag_crease(bu.band, 135, corridor, yu);
                break;
            }
            case FoldType::T2: {
                // crease placement mirrored and the run set half a width deeper
                Rational yd = yu - w / Rational(2);
                b.seg(-1, arc, {xj, yu}, {xj, yd}, 0, true);
                b.diag_crease(bu.band, 135, xj, yd);
                b.seg(bu.band, arc, {xj, yd}, {corridor, yd}, 0, false);
                b.diag_crease(bu.band, 45, corridor, yd);
                exitp = {corridor, yd};
                break;
            }
            case FoldType::T4:
            case FoldType::T3T4Combined: {
                LayoutPoint end = accordion(bu.band, arc, xj, yu, bu.twist, false);
                Rational yexit = yu - w;
                b.seg(-1, arc, end, {corridor, yexit}, 0, true);
                exitp = {corridor, yexit};
                break;
            }
            case FoldType::Direct: {
                b.seg(-1, arc, {xj, yu}, exitp, 0, true); // free corner routing
                break;
            }
        }

        // closure wiring: corridor down, bus left, return lane up, top bus right
        Rational yb2 = bus_y(j);
        b.seg(-1, arc, exitp, {corridor, yb2}, 0, true);
        b.seg(-1, arc, {corridor, yb2}, {return_x(j), yb2}, 0, true);
        Rational yt2 = top_bus_y(j);
        b.seg(-1, arc, {return_x(j), yb2}, {return_x(j), yt2}, 0, true);

        const Rational approach = xj - b.wx(2);
        b.seg(-1, arc, {return_x(j), yt2}, {approach, yt2}, 0, true);
        switch (tu.type) {
            case FoldType::T4:
            case FoldType::T3T4Combined: {
                LayoutPoint end = accordion(tu.band, arc, xj, yt2, tu.twist, true);
                b.seg(-1, arc, end, {xj, yt2 - w}, 0, true);
                b.seg(-1, arc, {xj, yt2 - w}, {xj, y_top}, 0, true);
                break;
            }
            case FoldType::Direct: {
                b.seg(-1, arc, {approach, yt2}, {xj, yt2}, 0, true);
                b.seg(-1, arc, {xj, yt2}, {xj, y_top}, 0, true);
                break;
            }
            default:
                throw std::invalid_argument("top units must be type 4, combined, or direct");
        }
    }
    return L;
}

// Lane ranges at the braid boundaries, derived from the plan: lower bands fold
// at the bottom (in reversed order for the EXTENDED reversal routing), upper
// bands at the top.
inline RibbonLayout assemble_layout(const FoldPlan& plan) {
    WeightedBandDiagram d;
    d.params = plan.params;
    d.branch = plan.branch;
    BraidWord word = reassembled_braid(d);

    std::vector<FoldUnitSpec> bottom, top;
    for (size_t i = 0; i < plan.entries.size(); ++i) {
        const auto& e = plan.entries[i];
        FoldUnitSpec u{e.weight, e.fold, e.twist_count, static_cast<long>(i)};
        if (e.region == BandRegion::Lower)
            bottom.push_back(u);
        else
            top.push_back(u);
    }
    if (plan.branch == CaseBranch::Extended) std::reverse(bottom.begin(), bottom.end());
    // REDUCED bottom arrival order: box bunch, untwisted tail, twisted block —
    // already the entry order.
    long long framing = 0;
    for (const auto& e : plan.entries)
        framing += static_cast<long long>(e.weight) * e.twist_count;
    return assemble_layout_parts(plan.width, word, bottom, top, plan_length(plan), framing);
}

// Planar diagram of the plan's closure, built combinatorially from the
// reassembled braid word rather than from layout geometry.
inline PlanarDiagram diagram_from_plan(const FoldPlan& plan) {
    WeightedBandDiagram d;
    d.params = plan.params;
    d.branch = plan.branch;
    BraidWord word = reassembled_braid(d);
    PlanarDiagram pd = diagram_from_braid_closure(word);
    if (pd.components != 1)
        throw std::invalid_argument("plan closure is not a knot");
    return pd;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationReport {
    bool fold_lines_disjoint = true;
    bool crossings_consistent = true;
    bool length_matches = true;
    Rational measured_length = Rational(0);
    Rational expected_length = Rational(0);
    std::vector<std::string> violations;

    bool all_pass() const {
        return fold_lines_disjoint && crossings_consistent && length_matches;
    }
};

namespace layout_detail {

inline Rational cross2(const LayoutPoint& o, const LayoutPoint& a, const LayoutPoint& p) {
    return (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
}

inline int sgn(const Rational& r) {
    if (r.num() == 0) return 0;
    return r.num() > 0 ? 1 : -1;
}

inline bool on_segment(const LayoutPoint& a, const LayoutPoint& b, const LayoutPoint& p) {
    if (sgn(cross2(a, b, p)) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

enum class Contact { None, Endpoint, ProperCross, Other };

inline Contact classify_contact(const LayoutPoint& a1, const LayoutPoint& b1,
                                const LayoutPoint& a2, const LayoutPoint& b2,
                                LayoutPoint* cross_at) {
    int d1 = sgn(cross2(a2, b2, a1)), d2 = sgn(cross2(a2, b2, b1));
    int d3 = sgn(cross2(a1, b1, a2)), d4 = sgn(cross2(a1, b1, b2));
    if (d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) {
        // proper interior crossing; solve for the point
        Rational denom = (b1.x - a1.x) * (b2.y - a2.y) - (b1.y - a1.y) * (b2.x - a2.x);
        Rational t = ((a2.x - a1.x) * (b2.y - a2.y) - (a2.y - a1.y) * (b2.x - a2.x)) / denom;
        if (cross_at) *cross_at = {a1.x + (b1.x - a1.x) * t, a1.y + (b1.y - a1.y) * t};
        return Contact::ProperCross;
    }
    bool e11 = a1 == a2 || a1 == b2, e12 = b1 == a2 || b1 == b2;
    bool touch = on_segment(a2, b2, a1) || on_segment(a2, b2, b1) || on_segment(a1, b1, a2) ||
                 on_segment(a1, b1, b2);
    if (!touch) return Contact::None;
    if ((e11 || e12) && !(e11 && e12)) {
        // single shared endpoint, nothing else in common
        const LayoutPoint& shared = e11 ? a1 : b1;
        const LayoutPoint& other1 = e11 ? b1 : a1;
        LayoutPoint other2 = (shared == a2) ? b2 : a2;
        if (!on_segment(a2, b2, other1) && !on_segment(a1, b1, other2))
            return Contact::Endpoint;
    }
    return Contact::Other;
}

} // namespace layout_detail

// Checks the layout against the flat-fold validity conditions: fold lines
// pairwise disjoint, every non-fold overlap a recorded transversal crossing
// with layer-consistent and acyclic over/under data, and the measured core
// length equal to the expected length exactly. Failures are reported, not
// thrown.
inline ValidationReport validate_layout(const RibbonLayout& layout) {
    using namespace layout_detail;
    ValidationReport rep;
    rep.expected_length = layout.expected_length;

    for (size_t i = 0; i < layout.fold_lines.size(); ++i)
        for (size_t j = i + 1; j < layout.fold_lines.size(); ++j) {
            const auto& f = layout.fold_lines[i];
            const auto& g = layout.fold_lines[j];
            if (classify_contact(f.a, f.b, g.a, g.b, nullptr) != Contact::None) {
                rep.fold_lines_disjoint = false;
                rep.violations.push_back("fold lines " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are not disjoint");
            }
        }

    // expected crossing lookup
    std::map<std::pair<size_t, size_t>, size_t> recorded;
    for (size_t k = 0; k < layout.crossings.size(); ++k) {
        auto& c = layout.crossings[k];
        size_t lo = std::min(c.over_seg, c.under_seg), hi = std::max(c.over_seg, c.under_seg);
        if (c.over_seg == c.under_seg || hi >= layout.segments.size()) {
            rep.crossings_consistent = false;
            rep.violations.push_back("crossing record " + std::to_string(k) + " is malformed");
            continue;
        }
        if (!recorded.emplace(std::make_pair(lo, hi), k).second) {
            rep.crossings_consistent = false;
            rep.violations.push_back("crossing record " + std::to_string(k) +
                                     " duplicates a pair (antisymmetry)");
        }
    }

    // sweep over y-sorted bounding boxes; only overlapping boxes can touch
    struct Box {
        size_t idx;
        Rational min_x, max_x, min_y, max_y;
    };
    std::vector<Box> boxes;
    boxes.reserve(layout.segments.size());
    for (size_t i = 0; i < layout.segments.size(); ++i) {
        const auto& s = layout.segments[i];
        boxes.push_back({i, std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x),
                         std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)});
    }
    std::sort(boxes.begin(), boxes.end(),
              [](const Box& a, const Box& b) { return a.min_y < b.min_y; });

    std::vector<std::vector<size_t>> adj(layout.segments.size());
    for (size_t bi = 0; bi < boxes.size(); ++bi) {
        for (size_t bj = bi + 1; bj < boxes.size() && !(boxes[bi].max_y < boxes[bj].min_y);
             ++bj) {
            if (boxes[bi].max_x < boxes[bj].min_x || boxes[bj].max_x < boxes[bi].min_x) continue;
            size_t i = std::min(boxes[bi].idx, boxes[bj].idx);
            size_t j = std::max(boxes[bi].idx, boxes[bj].idx);
            const auto& s1 = layout.segments[i];
            const auto& s2 = layout.segments[j];
            LayoutPoint at;
            Contact c = classify_contact(s1.a, s1.b, s2.a, s2.b, &at);
            if (c == Contact::None || c == Contact::Endpoint) continue;
            if (c == Contact::Other) {
                rep.crossings_consistent = false;
                rep.violations.push_back("segments " + std::to_string(i) + " and " +
                                         std::to_string(j) + " overlap non-transversally");
                continue;
            }
            auto it = recorded.find({i, j});
            if (it == recorded.end()) {
                rep.crossings_consistent = false;
                rep.violations.push_back("unrecorded crossing between segments " +
                                         std::to_string(i) + " and " + std::to_string(j));
                continue;
            }
            const auto& rec = layout.crossings[it->second];
            if (!(rec.at == at)) {
                rep.crossings_consistent = false;
                rep.violations.push_back("crossing point mismatch at record " +
                                         std::to_string(it->second));
            }
            const auto& over = layout.segments[rec.over_seg];
            const auto& under = layout.segments[rec.under_seg];
            if (over.layer < under.layer) {
                rep.crossings_consistent = false;
                rep.violations.push_back("layer order contradicts crossing record " +
                                         std::to_string(it->second));
            }
            adj[i].push_back(j);
            adj[j].push_back(i);
            recorded.erase(it);
        }
    }
    for (auto& leftover : recorded) {
        (void)leftover;
        rep.crossings_consistent = false;
        rep.violations.push_back("crossing record without geometric intersection");
    }

    // acyclicity of over/under within mutually-crossing triples
    {
        std::map<std::pair<size_t, size_t>, bool> over_of; // (a,b) -> a over b
        for (auto& c : layout.crossings) {
            over_of[{c.over_seg, c.under_seg}] = true;
            over_of[{c.under_seg, c.over_seg}] = false;
        }
        auto crossing_pair = [&](size_t a, size_t b) {
            return over_of.count({a, b}) != 0;
        };
        for (size_t a = 0; a < adj.size(); ++a)
            for (size_t b : adj[a])
                for (size_t c : adj[b])
                    if (a < b && b < c && crossing_pair(a, c)) {
                        bool ab = over_of[{a, b}], bc = over_of[{b, c}], ca = over_of[{c, a}];
                        if ((ab && bc && ca) || (!ab && !bc && !ca)) {
                            rep.crossings_consistent = false;
                            rep.violations.push_back(
                                "cyclic over/under among segments " + std::to_string(a) + ", " +
                                std::to_string(b) + ", " + std::to_string(c));
                        }
                    }
    }

    rep.measured_length = measured_core_length(layout);
    if (rep.measured_length != layout.expected_length) {
        rep.length_matches = false;
        rep.violations.push_back("measured core length " + rep.measured_length.str() +
                                 " differs from expected " + layout.expected_length.str());
    }
    return rep;
}

} // namespace ribbonfold

#endif
