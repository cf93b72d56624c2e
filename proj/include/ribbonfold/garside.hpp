#ifndef RIBBONFOLD_GARSIDE_HPP
#define RIBBONFOLD_GARSIDE_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "braid.hpp"

namespace ribbonfold {

// Left-weighted Delta-normal form in the classical Garside structure of the
// braid group: b = Delta^inf * A_1 ... A_k where each factor is a permutation
// braid (stored as its strand permutation), no factor is trivial or the half
// twist, and consecutive factors are left-weighted: the starting set of A_{i+1}
// is contained in the finishing set of A_i. Two words represent the same braid
// element iff their normal forms are identical.
struct GarsideNormalForm {
    int strands = 1;
    long long infimum = 0;
    std::vector<StrandPermutation> factors;

    bool operator==(const GarsideNormalForm& o) const {
        return strands == o.strands && infimum == o.infimum && factors == o.factors;
    }
    bool operator!=(const GarsideNormalForm& o) const { return !(*this == o); }
};

namespace garside_detail {

inline StrandPermutation identity_perm(int n) {
    StrandPermutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline StrandPermutation half_twist_perm(int n) {
    StrandPermutation p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
}

inline bool is_identity(const StrandPermutation& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

inline bool is_half_twist(const StrandPermutation& p) {
    int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        if (p[i] != n - 1 - i) return false;
    return true;
}

inline StrandPermutation invert(const StrandPermutation& p) {
    StrandPermutation q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

// Conjugation by Delta: tau(A) = Delta^{-1} A Delta, i.e. w0 . A . w0 on
// permutations. An involution on permutation braids.
inline StrandPermutation tau(const StrandPermutation& p) {
    int n = static_cast<int>(p.size());
    StrandPermutation q(n);
    for (int i = 0; i < n; ++i) q[i] = n - 1 - p[n - 1 - i];
    return q;
}

// sigma_{i+1} (0-based index i) left-divides the permutation braid iff the
// strands starting at i, i+1 cross, i.e. the permutation inverts them.
inline bool in_starting_set(const StrandPermutation& p, int i) { return p[i] > p[i + 1]; }

// sigma_{i+1} right-divides iff the strands ending at positions i, i+1 cross.
inline bool in_finishing_set(const StrandPermutation& p, const StrandPermutation& pinv, int i) {
    (void)p;
    return pinv[i] > pinv[i + 1];
}

} // namespace garside_detail

// Unique left-weighted normal form of the word. O(k^2 n^2) over the factor
// count k; fine at the few-hundred-letter scale this library works with.
inline GarsideNormalForm garside_normal_form(const BraidWord& b) {
    using namespace garside_detail;
    const int n = b.strands;
    GarsideNormalForm nf;
    nf.strands = n;
    if (n == 1) return nf;

    std::vector<StrandPermutation> factors;
    long long inf = 0;

    // Rewrite the word as Delta^inf times positive permutation-braid factors:
    // sigma_i contributes a transposition factor, sigma_i^{-1} contributes
    // Delta^{-1} (Delta sigma_i^{-1}) with the Delta pushed to the front through
    // the existing factors by tau.
    for (int g : b.letters) {
        int i = (g > 0 ? g : -g) - 1; // 0-based crossing position
        if (g > 0) {
            StrandPermutation f = identity_perm(n);
            std::swap(f[i], f[i + 1]);
            factors.push_back(std::move(f));
        } else {
            inf -= 1;
            for (auto& f : factors) f = tau(f);
            StrandPermutation x(n);
            for (int k = 0; k < n; ++k) {
                int v = n - 1 - k;
                if (v == i) v = i + 1;
                else if (v == i + 1) v = i;
                x[k] = v;
            }
            if (!is_identity(x)) factors.push_back(std::move(x));
        }
    }

    // Left-weight adjacent pairs until stable, absorbing half twists into the
    // infimum and dropping trivial factors as they appear.
    bool changed = true;
    while (changed) {
        changed = false;
        // Absorb Delta factors (tau-flip everything to their left).
        for (size_t i = 0; i < factors.size();) {
            if (is_half_twist(factors[i])) {
                for (size_t j = 0; j < i; ++j) factors[j] = tau(factors[j]);
                factors.erase(factors.begin() + static_cast<long>(i));
                inf += 1;
                changed = true;
                i = 0;
            } else if (is_identity(factors[i])) {
                factors.erase(factors.begin() + static_cast<long>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        for (size_t i = 0; i + 1 < factors.size(); ++i) {
            StrandPermutation& a = factors[i];
            StrandPermutation& c = factors[i + 1];
            StrandPermutation ainv = invert(a);
            bool moved = true;
            while (moved) {
                moved = false;
                for (int j = 0; j < n - 1; ++j) {
                    if (!in_starting_set(c, j)) continue;
                    if (in_finishing_set(a, ainv, j)) continue;
                    // Slide sigma_{j+1} from the front of c to the back of a.
                    for (int k = 0; k < n; ++k) {
                        if (a[k] == j) a[k] = j + 1;
                        else if (a[k] == j + 1) a[k] = j;
                    }
                    std::swap(ainv[j], ainv[j + 1]);
                    std::swap(c[j], c[j + 1]);
                    moved = true;
                    changed = true;
                }
            }
        }
    }

    nf.infimum = inf;
    nf.factors = std::move(factors);
    return nf;
}

// Spell a permutation braid as a positive word: repeatedly emit the smallest
// prefix generator. Deterministic; letter count equals the inversion count.
inline BraidWord permutation_braid_word(const StrandPermutation& perm, int strands) {
    using namespace garside_detail;
    BraidWord w(strands);
    StrandPermutation p = perm;
    bool more = true;
    while (more) {
        more = false;
        for (int i = 0; i < strands - 1; ++i) {
            if (p[i] > p[i + 1]) {
                w.letters.push_back(i + 1);
                std::swap(p[i], p[i + 1]);
                more = true;
                break;
            }
        }
    }
    return w;
}

// The word spelled by a normal form: Delta^inf followed by the factors.
inline BraidWord normal_form_word(const GarsideNormalForm& nf) {
    using namespace garside_detail;
    BraidWord w(nf.strands);
    if (nf.strands > 1 && nf.infimum != 0) {
        BraidWord delta = permutation_braid_word(half_twist_perm(nf.strands), nf.strands);
        BraidWord block(nf.strands);
        long long reps = nf.infimum > 0 ? nf.infimum : -nf.infimum;
        for (long long k = 0; k < reps; ++k) block = concat(block, delta);
        if (nf.infimum < 0) block = inverse_word(block);
        w = block;
    }
    for (const auto& f : nf.factors) w = concat(w, permutation_braid_word(f, nf.strands));
    return w;
}

// Decides equality of braid elements via normal forms. Requires equal strand
// counts.
inline bool braid_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("braid_equal requires equal strand counts");
    return garside_normal_form(a) == garside_normal_form(b);
}

} // namespace ribbonfold

#endif
