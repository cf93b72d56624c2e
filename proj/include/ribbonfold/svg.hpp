#ifndef RIBBONFOLD_SVG_HPP
#define RIBBONFOLD_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace ribbonfold {

namespace svg_detail {

inline double to_double(const Rational& r) {
    return static_cast<double>(r.num()) / static_cast<double>(r.den());
}

inline std::string num3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v + 0.0); // normalize -0
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

} // namespace svg_detail

// Deterministic SVG 1.1 rendering: segments emitted in (band, arc, seq) order
// with fixed 3-decimal coordinates, fold lines dashed, under-strands broken at
// crossings, roll layers separated by their stacking offsets. Identical
// layouts render to byte-identical documents.
inline std::string render_svg(const RibbonLayout& layout) {
    using svg_detail::num3;
    using svg_detail::to_double;

    const double w = layout.width.num() == 0 ? 1.0 : to_double(layout.width);
    double min_x = 0, min_y = 0, max_x = 10, max_y = 10;
    bool first = true;
    auto grow = [&](const LayoutPoint& p) {
        double x = to_double(p.x), y = -to_double(p.y); // flip so the braid reads downward
        if (first) { min_x = max_x = x; min_y = max_y = y; first = false; return; }
        min_x = std::min(min_x, x); max_x = std::max(max_x, x);
        min_y = std::min(min_y, y); max_y = std::max(max_y, y);
    };
    for (const auto& s : layout.segments) { grow(s.a); grow(s.b); }
    for (const auto& f : layout.fold_lines) { grow(f.a); grow(f.b); }
    double margin = 2.0 * w;
    min_x -= margin; min_y -= margin; max_x += margin; max_y += margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    out += num3(min_x) + " " + num3(min_y) + " " + num3(max_x - min_x) + " " +
           num3(max_y - min_y) + "\">\n";

    // stable segment order
    std::vector<size_t> order(layout.segments.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        const auto& a = layout.segments[i];
        const auto& b = layout.segments[j];
        if (a.band != b.band) return a.band < b.band;
        if (a.arc != b.arc) return a.arc < b.arc;
        return a.seq < b.seq;
    });

    // gaps where a segment passes under
    std::vector<std::vector<double>> under_ts(layout.segments.size());
    for (const auto& c : layout.crossings) {
        const auto& s = layout.segments[c.under_seg];
        double ax = to_double(s.a.x), ay = to_double(s.a.y);
        double bx = to_double(s.b.x), by = to_double(s.b.y);
        double px = to_double(c.at.x), py = to_double(c.at.y);
        double len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
        if (len2 <= 0) continue;
        under_ts[c.under_seg].push_back(((px - ax) * (bx - ax) + (py - ay) * (by - ay)) / len2);
    }

    for (size_t idx : order) {
        const auto& s = layout.segments[idx];
        double ax = to_double(s.a.x), ay = -to_double(s.a.y);
        double bx = to_double(s.b.x), by = -to_double(s.b.y);
        const char* color = s.connector ? (s.interface_stub ? "#c8c8c8" : "#8a8a8a") : "#303030";
        double len = std::sqrt((bx - ax) * (bx - ax) + (by - ay) * (by - ay));
        std::vector<std::pair<double, double>> pieces;
        auto& ts = under_ts[idx];
        if (ts.empty() || len <= 0) {
            pieces.push_back({0.0, 1.0});
        } else {
            std::sort(ts.begin(), ts.end());
            double gap = (0.6 * w) / len;
            double cur = 0.0;
            for (double t : ts) {
                double lo = std::max(0.0, t - gap), hi = std::min(1.0, t + gap);
                if (lo > cur) pieces.push_back({cur, lo});
                cur = hi;
            }
            if (cur < 1.0) pieces.push_back({cur, 1.0});
        }
        for (auto& [t0, t1] : pieces) {
            double x0 = ax + (bx - ax) * t0, y0 = ay + (by - ay) * t0;
            double x1 = ax + (bx - ax) * t1, y1 = ay + (by - ay) * t1;
            out += "<line x1=\"" + num3(x0) + "\" y1=\"" + num3(y0) + "\" x2=\"" + num3(x1) +
                   "\" y2=\"" + num3(y1) + "\" stroke=\"" + color + "\" stroke-width=\"" +
                   num3(0.9 * w) + "\"/>\n";
        }
    }

    for (const auto& f : layout.fold_lines) {
        out += "<line x1=\"" + num3(to_double(f.a.x)) + "\" y1=\"" + num3(-to_double(f.a.y)) +
               "\" x2=\"" + num3(to_double(f.b.x)) + "\" y2=\"" + num3(-to_double(f.b.y)) +
               "\" stroke=\"#cc3333\" stroke-width=\"" + num3(0.12 * w) +
               "\" stroke-dasharray=\"" + num3(0.3 * w) + " " + num3(0.2 * w) + "\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace ribbonfold

#endif
