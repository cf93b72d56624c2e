#ifndef RIBBONFOLD_RATIONAL_HPP
#define RIBBONFOLD_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ribbonfold {

// Exact rational on int64. Always stored normalized: den > 0, gcd(|num|, den) == 1.
// Large enough for every length/coordinate this library produces; arithmetic that
// would overflow int64 is out of scope here.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const {
        long long g = std::gcd(den_, o.den_);
        long long scaled = o.den_ / g;
        return Rational(num_ * scaled + o.num_ * (den_ / g), den_ * scaled);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    // cross-reduce before multiplying to keep intermediates small
    Rational operator*(const Rational& o) const {
        long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
        long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
        return Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return *this * Rational(o.den_, o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_integer() const { return den_ == 1; }

    // "a/b", or just "a" when integral.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "a" or "a/b"; also accepts a plain decimal like "1.5".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            long long n = std::stoll(s.substr(0, slash));
            long long d = std::stoll(s.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string frac = s.substr(dot + 1);
            if (frac.empty() || frac.size() > 9) throw std::invalid_argument("bad rational: " + s);
            long long scale = 1;
            for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
            long long whole = std::stoll(s.substr(0, dot));
            long long f = std::stoll(frac);
            bool neg = !s.empty() && s[0] == '-';
            long long n = whole * scale + (neg ? -f : f);
            return Rational(n, scale);
        }
        return Rational(std::stoll(s));
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

} // namespace ribbonfold

#endif
