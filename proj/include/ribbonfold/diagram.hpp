#ifndef RIBBONFOLD_DIAGRAM_HPP
#define RIBBONFOLD_DIAGRAM_HPP

#include <stdexcept>
#include <vector>

#include "braid.hpp"
#include "invariants.hpp"
#include "laurent.hpp"

namespace ribbonfold {

// Oriented planar knot/link diagram as crossing incidences between arcs. An
// arc is a maximal over-strand: it terminates exactly where it passes under a
// crossing.
struct PlanarCrossing {
    int over_arc;
    int under_in_arc;
    int under_out_arc;
    int sign; // +1 matches a positive braid letter
};

struct PlanarDiagram {
    int arcs = 0;
    int components = 0;
    std::vector<PlanarCrossing> crossings;
};

namespace diagram_detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace diagram_detail

// Diagram of the closure of a braid word: walk the word top to bottom,
// terminating the under-strand's arc at each crossing, then identify each
// bottom endpoint with its top endpoint.
inline PlanarDiagram diagram_from_braid_closure(const BraidWord& b) {
    const int n = b.strands;
    std::vector<int> arc_at(n);
    for (int i = 0; i < n; ++i) arc_at[i] = i;
    int next_arc = n;

    struct RawCrossing { int over, under_in, under_out, sign; };
    std::vector<RawCrossing> raw;
    raw.reserve(b.size());

    for (int g : b.letters) {
        int left = (g > 0 ? g : -g) - 1;
        int right = left + 1;
        int over_pos = g > 0 ? left : right;
        int under_pos = g > 0 ? right : left;
        int over_arc = arc_at[over_pos];
        int under_in = arc_at[under_pos];
        int under_out = next_arc++;
        raw.push_back({over_arc, under_in, under_out, g > 0 ? 1 : -1});
        arc_at[under_pos] = over_arc;   // strands swap positions
        arc_at[over_pos] = under_out;   // the under strand continues as a fresh arc
    }

    diagram_detail::UnionFind uf(next_arc);
    for (int j = 0; j < n; ++j) uf.unite(arc_at[j], j);

    std::vector<int> label(next_arc, -1);
    int arc_count = 0;
    auto id_of = [&](int a) {
        int root = uf.find(a);
        if (label[root] < 0) label[root] = arc_count++;
        return label[root];
    };

    PlanarDiagram d;
    for (const auto& c : raw)
        d.crossings.push_back({id_of(c.over), id_of(c.under_in), id_of(c.under_out), c.sign});
    // Arcs never interrupted by an undercrossing still form closed loops.
    for (int j = 0; j < n; ++j) id_of(j);
    d.arcs = arc_count;
    d.components = closure_component_count(b);
    return d;
}

// Alexander polynomial from the diagram's Wirtinger presentation: one row per
// crossing with entries (1-t, t, -1) on (over, under-in, under-out) for a
// positive crossing and the unit-multiple (t-1, 1, -t) for a negative one;
// delete one row and one column and take the exact determinant. This route
// never touches the Burau representation, so it cross-checks
// alexander_from_braid.
inline LaurentPolynomial alexander_from_diagram(const PlanarDiagram& d) {
    if (d.components != 1)
        throw std::invalid_argument("alexander_from_diagram requires a one-component diagram");
    const size_t n = d.crossings.size();
    if (n == 0) return LaurentPolynomial::one();
    if (d.arcs != static_cast<int>(n))
        throw std::invalid_argument("knot diagram must have as many arcs as crossings");

    LaurentMatrix m(n, static_cast<size_t>(d.arcs));
    const LaurentPolynomial t = LaurentPolynomial::t();
    for (size_t i = 0; i < n; ++i) {
        const auto& c = d.crossings[i];
        if (c.sign > 0) {
            m.at(i, c.over_arc) += LaurentPolynomial::one() - t;
            m.at(i, c.under_in_arc) += t;
            m.at(i, c.under_out_arc) -= LaurentPolynomial::one();
        } else {
            m.at(i, c.over_arc) += t - LaurentPolynomial::one();
            m.at(i, c.under_in_arc) += LaurentPolynomial::one();
            m.at(i, c.under_out_arc) -= t;
        }
    }

    LaurentMatrix minor(n - 1, n - 1);
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = 0; j + 1 < n; ++j) minor.at(i, j) = m.at(i, j);
    LaurentPolynomial det = laurent_determinant(minor);
    return normalize_alexander(det);
}

} // namespace ribbonfold

#endif
