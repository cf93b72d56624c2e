#ifndef RIBBONFOLD_INVARIANTS_HPP
#define RIBBONFOLD_INVARIANTS_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "braid.hpp"
#include "laurent.hpp"

namespace ribbonfold {

// Dense matrix over the Laurent ring. Internal representation only; nothing
// here is part of a serialized interface.
class LaurentMatrix {
public:
    LaurentMatrix() : rows_(0), cols_(0) {}
    LaurentMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static LaurentMatrix identity(size_t n) {
        LaurentMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPolynomial::one();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    LaurentPolynomial& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const LaurentPolynomial& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        LaurentMatrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }

    bool operator==(const LaurentMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    size_t rows_, cols_;
    std::vector<LaurentPolynomial> data_;
};

// Exact determinant: unit pivots (single terms +-t^k) are eliminated by plain
// division-free row reduction first, which keeps the Wirtinger-style sparse
// matrices small; whatever dense core remains goes through fraction-free
// Bareiss elimination. All divisions are exact in the Laurent ring.
inline LaurentPolynomial laurent_determinant(LaurentMatrix m) {
    const size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return LaurentPolynomial::one();

    std::vector<size_t> rows(n), cols(n);
    for (size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
    LaurentPolynomial unit_factor = LaurentPolynomial::one();
    int sign = 1;

    // Phase 1: unit pivots, Markowitz-style fill preference.
    while (rows.size() > 1) {
        size_t best_ri = rows.size(), best_ci = 0;
        long best_score = -1;
        std::vector<long> row_nnz(rows.size(), 0), col_nnz(cols.size(), 0);
        for (size_t ri = 0; ri < rows.size(); ++ri)
            for (size_t ci = 0; ci < cols.size(); ++ci)
                if (!m.at(rows[ri], cols[ci]).is_zero()) { ++row_nnz[ri]; ++col_nnz[ci]; }
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                const auto& e = m.at(rows[ri], cols[ci]);
                if (e.is_zero() || !e.is_unit()) continue;
                long score = (row_nnz[ri] - 1) * (col_nnz[ci] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_ri = ri;
                    best_ci = ci;
                }
            }
        }
        if (best_ri == rows.size()) break;

        size_t pr = rows[best_ri], pc = cols[best_ci];
        LaurentPolynomial pivot = m.at(pr, pc);
        LaurentPolynomial pivot_inv =
            LaurentPolynomial::term(-pivot.min_exponent(), pivot.coeff(pivot.min_exponent()));
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            if (ri == best_ri) continue;
            size_t r = rows[ri];
            if (m.at(r, pc).is_zero()) continue;
            LaurentPolynomial factor = m.at(r, pc) * pivot_inv;
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                size_t c = cols[ci];
                if (m.at(pr, c).is_zero()) continue;
                m.at(r, c) -= factor * m.at(pr, c);
            }
        }
        if ((best_ri + best_ci) % 2 == 1) sign = -sign;
        unit_factor *= pivot;
        rows.erase(rows.begin() + static_cast<long>(best_ri));
        cols.erase(cols.begin() + static_cast<long>(best_ci));
    }

    // Phase 2: Bareiss on the remaining block.
    const size_t k = rows.size();
    LaurentPolynomial result = LaurentPolynomial::one();
    if (k == 1) {
        result = m.at(rows[0], cols[0]);
    } else if (k > 1) {
        std::vector<std::vector<LaurentPolynomial>> a(k, std::vector<LaurentPolynomial>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) a[i][j] = m.at(rows[i], cols[j]);
        LaurentPolynomial prev = LaurentPolynomial::one();
        int bsign = 1;
        for (size_t step = 0; step + 1 < k; ++step) {
            size_t piv = step;
            while (piv < k && a[piv][step].is_zero()) ++piv;
            if (piv == k) return LaurentPolynomial(); // singular
            if (piv != step) { std::swap(a[piv], a[step]); bsign = -bsign; }
            for (size_t i = step + 1; i < k; ++i) {
                for (size_t j = step + 1; j < k; ++j) {
                    LaurentPolynomial num = a[i][j] * a[step][step] - a[i][step] * a[step][j];
                    a[i][j] = LaurentPolynomial::exact_divide(num, prev);
                }
                a[i][step] = LaurentPolynomial();
            }
            prev = a[step][step];
        }
        result = a[k - 1][k - 1];
        if (bsign < 0) result = -result;
    }
    result = result * unit_factor;
    if (sign < 0) result = -result;
    return result;
}

// Image of the word under the reduced Burau representation, an (n-1)x(n-1)
// matrix over Laurent polynomials. The identity word maps to the identity
// matrix and concatenation maps to matrix product. Accumulated by column
// updates: right-multiplying by the image of sigma_i^{+-1} touches only column
// i-1 (0-based).
inline LaurentMatrix reduced_burau(const BraidWord& b) {
    if (b.strands < 2) throw std::invalid_argument("reduced Burau needs at least 2 strands");
    const size_t dim = static_cast<size_t>(b.strands - 1);
    LaurentMatrix m = LaurentMatrix::identity(dim);
    const LaurentPolynomial t = LaurentPolynomial::t();
    const LaurentPolynomial tinv = LaurentPolynomial::t(-1);
    for (int g : b.letters) {
        size_t c = static_cast<size_t>((g > 0 ? g : -g) - 1);
        for (size_t row = 0; row < dim; ++row) {
            LaurentPolynomial left = c > 0 ? m.at(row, c - 1) : LaurentPolynomial();
            LaurentPolynomial right = c + 1 < dim ? m.at(row, c + 1) : LaurentPolynomial();
            if (g > 0)
                m.at(row, c) = (left - m.at(row, c)) * t + right;
            else
                m.at(row, c) = left + (right - m.at(row, c)) * tinv;
        }
    }
    return m;
}

// Canonical representative of a nonzero Laurent polynomial up to units +-t^k:
// exponents centered (lowest = -floor(span/2)) and positive leading
// coefficient. Two polynomials agree as Alexander polynomials iff their
// normalized forms are identical.
inline LaurentPolynomial normalize_alexander(const LaurentPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    int span = f.max_exponent() - f.min_exponent();
    int target_min = -(span / 2);
    LaurentPolynomial g = f;
    g.scale(target_min - f.min_exponent(), 1);
    if (g.coeff(g.max_exponent()) < 0) g = -g;
    return g;
}

// Alexander polynomial of the braid closure via the reduced Burau matrix:
// det(rho(b) - I) * (t - 1) / (t^n - 1), normalized. Requires a knot closure;
// the divisions are asserted exact.
inline LaurentPolynomial alexander_from_braid(const BraidWord& b) {
    if (closure_component_count(b) != 1)
        throw std::invalid_argument("alexander_from_braid requires a one-component closure");
    if (b.strands == 1) return LaurentPolynomial::one();
    LaurentMatrix m = reduced_burau(b);
    const size_t dim = m.rows();
    for (size_t i = 0; i < dim; ++i) m.at(i, i) -= LaurentPolynomial::one();
    LaurentPolynomial det = laurent_determinant(m);
    if (det.is_zero())
        throw std::logic_error("Burau determinant vanished on a knot closure");
    LaurentPolynomial num = det * t_power_minus_one(1);
    LaurentPolynomial quot = LaurentPolynomial::exact_divide(num, t_power_minus_one(b.strands));
    return normalize_alexander(quot);
}

// Independent closed-form oracle for torus knots:
// Delta_{p,q}(t) = (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)),
// computed by exact polynomial division, never through a braid.
inline LaurentPolynomial alexander_torus_oracle(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus oracle needs p, q >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus oracle needs gcd(p,q) = 1");
    LaurentPolynomial num = t_power_minus_one(p * q) * t_power_minus_one(1);
    LaurentPolynomial quot = LaurentPolynomial::exact_divide(num, t_power_minus_one(p));
    quot = LaurentPolynomial::exact_divide(quot, t_power_minus_one(q));
    return normalize_alexander(quot);
}

} // namespace ribbonfold

#endif
