#ifndef RIBBONFOLD_LAURENT_HPP
#define RIBBONFOLD_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ribbonfold {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in t. Coefficients are exact big integers; the term
// map never stores zeros, so the zero polynomial is the empty map.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long long c) { if (c != 0) terms_[0] = c; }
    LaurentPolynomial(const BigInt& c) { if (c != 0) terms_[0] = c; }

    static LaurentPolynomial term(int exponent, const BigInt& coeff) {
        LaurentPolynomial p;
        if (coeff != 0) p.terms_[exponent] = coeff;
        return p;
    }
    static LaurentPolynomial t(int exponent = 1) { return term(exponent, 1); }
    static LaurentPolynomial one() { return LaurentPolynomial(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    int min_exponent() const {
        if (is_zero()) throw std::domain_error("min_exponent of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exponent() const {
        if (is_zero()) throw std::domain_error("max_exponent of zero polynomial");
        return terms_.rbegin()->first;
    }

    BigInt coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const std::map<int, BigInt>& terms() const { return terms_; }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this; r += o; return r;
    }
    LaurentPolynomial operator-(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this; r -= o; return r;
    }
    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        LaurentPolynomial r;
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    // Multiply by the monomial c * t^e in place; cheaper than a general product.
    void scale(int exponent, const BigInt& coeff) {
        if (coeff == 0) { terms_.clear(); return; }
        std::map<int, BigInt> next;
        for (auto& [e, c] : terms_) next[e + exponent] = c * coeff;
        terms_ = std::move(next);
    }

    // t -> t^{-1}
    LaurentPolynomial substitute_inverse() const {
        LaurentPolynomial r;
        for (auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    // Exact quotient; throws if the division leaves a remainder or divides by zero.
    static LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (b.is_zero()) throw std::domain_error("laurent division by zero");
        if (a.is_zero()) return LaurentPolynomial();
        int shift = a.min_exponent() - b.min_exponent();
        std::vector<BigInt> num = a.dense();
        std::vector<BigInt> den = b.dense();
        if (num.size() < den.size()) throw std::domain_error("inexact laurent division");
        std::vector<BigInt> quot(num.size() - den.size() + 1);
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            BigInt lead = num[i + den.size() - 1];
            if (lead == 0) continue;
            if (lead % den.back() != 0) throw std::domain_error("inexact laurent division");
            BigInt q = lead / den.back();
            quot[i] = q;
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
        }
        for (auto& c : num)
            if (c != 0) throw std::domain_error("inexact laurent division");
        LaurentPolynomial r;
        for (size_t i = 0; i < quot.size(); ++i)
            if (quot[i] != 0) r.terms_[static_cast<int>(i) + shift] = quot[i];
        return r;
    }

    size_t term_count() const { return terms_.size(); }

    // Single term +-t^k; these act as units of the Laurent ring.
    bool is_unit() const {
        return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (first) { if (c < 0) os << "-"; first = false; }
            else os << (c < 0 ? " - " : " + ");
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void add_term(int e, const BigInt& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Coefficients shifted so the lowest exponent sits at index 0.
    std::vector<BigInt> dense() const {
        std::vector<BigInt> v(max_exponent() - min_exponent() + 1);
        int lo = min_exponent();
        for (auto& [e, c] : terms_) v[e - lo] = c;
        return v;
    }

    std::map<int, BigInt> terms_;
};

// t^n - 1
inline LaurentPolynomial t_power_minus_one(int n) {
    LaurentPolynomial p = LaurentPolynomial::t(n);
    p -= LaurentPolynomial::one();
    return p;
}

} // namespace ribbonfold

#endif
