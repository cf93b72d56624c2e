#ifndef RIBBONFOLD_BRAID_HPP
#define RIBBONFOLD_BRAID_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ribbonfold {

// A word in the Artin generators of the braid group on `strands` strands.
// Letter g with 1 <= |g| <= strands-1 encodes sigma_|g| (g > 0) or its inverse
// (g < 0). Convention: sigma_i crosses strands i, i+1 with the strand at
// position i passing over. Words are immutable values; operations return new
// words.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    explicit BraidWord(int n) : strands(n) {
        if (n < 1) throw std::invalid_argument("braid needs at least one strand");
    }
    BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
        if (n < 1) throw std::invalid_argument("braid needs at least one strand");
        for (int g : letters) check_letter(g);
    }

    void check_letter(int g) const {
        if (g == 0 || g > strands - 1 || -g > strands - 1)
            throw std::invalid_argument("letter " + std::to_string(g) + " out of range for " +
                                        std::to_string(strands) + " strands");
    }

    size_t size() const { return letters.size(); }

    bool operator==(const BraidWord& o) const {
        return strands == o.strands && letters == o.letters;
    }
};

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch in concat");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

inline BraidWord inverse_word(const BraidWord& b) {
    BraidWord r(b.strands);
    r.letters.reserve(b.size());
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

// Same word on a larger strand count.
inline BraidWord embed(const BraidWord& b, int strands) {
    if (strands < b.strands) throw std::invalid_argument("cannot embed into fewer strands");
    BraidWord r(strands);
    r.letters = b.letters;
    return r;
}

// Every letter's sign flips; word order is preserved. Closure is the mirror knot.
inline BraidWord mirror_braid(const BraidWord& b) {
    BraidWord r(b.strands);
    r.letters.reserve(b.size());
    for (int g : b.letters) r.letters.push_back(-g);
    return r;
}

// (sigma_1 sigma_2 ... sigma_{p-1})^q on p strands; closure is the (p,q) torus
// link, a knot iff gcd(p,q) = 1.
inline BraidWord torus_braid(int p, int q) {
    if (p < 2) throw std::invalid_argument("torus braid needs p >= 2");
    if (q < 1) throw std::invalid_argument("torus braid needs q >= 1");
    BraidWord b(p);
    b.letters.reserve(static_cast<size_t>(q) * (p - 1));
    for (int rep = 0; rep < q; ++rep)
        for (int i = 1; i <= p - 1; ++i) b.letters.push_back(i);
    return b;
}

// `count` full twists on the n strands offset+1 .. offset+n inside a braid on
// `total` strands. One full twist is (sigma_{offset+1} ... sigma_{offset+n-1})^n;
// a negative count inverts every letter and reverses the word. n = 1 or
// count = 0 gives the empty word.
inline BraidWord full_twist_word(int n, int count, int offset, int total) {
    if (n < 1) throw std::invalid_argument("full twist needs n >= 1");
    if (offset < 0 || offset + n > total)
        throw std::invalid_argument("full twist block out of range");
    BraidWord b(total);
    if (n == 1 || count == 0) return b;
    int reps = count > 0 ? count : -count;
    b.letters.reserve(static_cast<size_t>(reps) * n * (n - 1));
    for (int rep = 0; rep < reps; ++rep)
        for (int row = 0; row < n; ++row)
            for (int i = offset + 1; i <= offset + n - 1; ++i) b.letters.push_back(i);
    return count > 0 ? b : inverse_word(b);
}

// Positive permutation braid moving the block at positions offset+1..offset+x
// rightward past the block at offset+x+1..offset+x+y. Each pair of strands from
// the two blocks crosses exactly once; blocks stay internally parallel.
// `positive` selects the crossing sign.
inline BraidWord block_transposition_word(int offset, int x, int y, int total, bool positive = true) {
    if (x < 0 || y < 0 || offset < 0 || offset + x + y > total)
        throw std::invalid_argument("block transposition out of range");
    BraidWord b(total);
    b.letters.reserve(static_cast<size_t>(x) * y);
    for (int k = 0; k < x; ++k)
        for (int i = offset + x - k; i <= offset + x - k + y - 1; ++i)
            b.letters.push_back(positive ? i : -i);
    return b;
}

using StrandPermutation = std::vector<int>; // image[i] = end position of strand entering at i (0-based)

// The permutation induced on strand endpoints; sigma_i and its inverse both
// transpose positions i, i+1.
inline StrandPermutation braid_permutation(const BraidWord& b) {
    std::vector<int> at(b.strands); // at[pos] = strand currently at pos
    for (int i = 0; i < b.strands; ++i) at[i] = i;
    for (int g : b.letters) {
        int i = g > 0 ? g : -g;
        std::swap(at[i - 1], at[i]);
    }
    StrandPermutation image(b.strands);
    for (int pos = 0; pos < b.strands; ++pos) image[at[pos]] = pos;
    return image;
}

inline int permutation_cycle_count(const StrandPermutation& perm) {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        size_t j = i;
        while (!seen[j]) { seen[j] = true; j = static_cast<size_t>(perm[j]); }
    }
    return cycles;
}

// Number of link components of the braid closure.
inline int closure_component_count(const BraidWord& b) {
    return permutation_cycle_count(braid_permutation(b));
}

// Torus knot presented with all p+q "diagonal" strands visible: the closure of
// the (p, q) block transposition on p+q strands is T_{p,q}, and a twist box may
// be placed on any window of r adjacent strands (offset selectable; all offsets
// give the same knot). This is the presentation in which the twist region of a
// twisted torus knot makes sense for every 1 <= r < p+q.
inline BraidWord torus_window_braid(int p, int q, int r, int s, int offset = 0) {
    return concat(block_transposition_word(0, p, q, p + q),
                  full_twist_word(r, s, offset, p + q));
}

// Braid on r strands realizing T_{p,q;r,s} for max(p,q) < r < p+q: three
// parallel bunches sized r-p, p+q-r, r-q, the middle bunch carrying one full
// twist, routed through a full reversal (each pair of bunches crosses once,
// positively), then s full twists on all r strands. Selected against the
// window form and the r <= p form; see the test suite.
inline BraidWord extended_band_braid(int p, int q, int r, int s) {
    int a = r - p, b = p + q - r, c = r - q;
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("extended band braid needs max(p,q) < r < p+q");
    BraidWord w = block_transposition_word(a, b, c, r);        // [A][B][C] -> [A][C][B]
    w = concat(w, block_transposition_word(0, a, c, r));       // -> [C][A][B]
    w = concat(w, block_transposition_word(c, a, b, r));       // -> [C][B][A]
    w = concat(w, full_twist_word(b, 1, c, r));                // kink twist on the middle bunch
    return concat(w, full_twist_word(r, s, 0, r));
}

// Braid word whose closure is the twisted torus knot T_{p,q;r,s}: the (p,q)
// torus braid with s full twists on r adjacent strands.
//   r <= p:            torus word plus the twist box on the first r strands,
//                      on p strands.
//   max(p,q) < r:      extended_band_braid on r strands.
//   p < r <= q:        the window presentation on p+q strands (no r-strand
//                      braid exists in general here; this range only occurs
//                      before the p/q normalization swap).
inline BraidWord twisted_torus_braid(int p, int q, int r, int s) {
    if (p < 2) throw std::invalid_argument("twisted torus braid needs p >= 2");
    if (q < 1) throw std::invalid_argument("twisted torus braid needs q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("link, not knot: gcd(p,q) != 1");
    if (s == 0) throw std::invalid_argument("twist count s must be nonzero");
    if (r < 1 || r >= p + q) throw std::invalid_argument("r must satisfy 1 <= r < p+q");
    if (r <= p) return concat(torus_braid(p, q), full_twist_word(r, s, 0, p));
    if (r > q) return extended_band_braid(p, q, r, s);
    return torus_window_braid(p, q, r, s);
}

// Both sides of the torus braid-word identity: the left is the torus word, the
// right is the full twist on the first q strands followed by the q descending
// runs (sigma_{q-k} ... sigma_{p-1-k}), k = 0..q-1, routing the twisted block
// past the remaining p-q strands.
inline std::pair<BraidWord, BraidWord> torus_decomposition_identity(int p, int q) {
    if (q < 2 || q >= p) throw std::invalid_argument("identity needs 2 <= q < p");
    BraidWord left = torus_braid(p, q);
    BraidWord right = concat(full_twist_word(q, 1, 0, p), block_transposition_word(0, q, p - q, p));
    return {left, right};
}

} // namespace ribbonfold

#endif
