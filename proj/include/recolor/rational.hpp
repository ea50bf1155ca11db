#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace recolor {

/// Exact rational on int64 with 128-bit intermediates. All boundary
/// comparisons in this project (lightness, size thresholds, growth
/// factors) are boundary-inclusive by definition, so they must be exact;
/// floating point is never used for them.
class Rational {
public:
    Rational() = default;
    Rational(int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(int64_t num, int64_t den) : num_(num), den_(den) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // "3", "-7/2", "0.25" are all accepted.
    static Rational parse(const std::string& s);

    int64_t floor() const {
        int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    int64_t ceil() const {
        int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    static Rational pow2(int k) {
        if (k < 0 || k > 62) throw std::overflow_error("Rational::pow2 exponent out of range");
        return Rational(int64_t{1} << k);
    }

    Rational operator-() const { return Rational(-num_, den_, no_norm{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;
    struct no_norm {};
    Rational(int64_t n, int64_t d, no_norm) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 an = n < 0 ? -n : n;
        i128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: overflow");
        return Rational(int64_t(n), int64_t(d), no_norm{});
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        int64_t n = std::stoll(s.substr(0, slash));
        int64_t d = std::stoll(s.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (frac.size() > 18) throw std::invalid_argument("Rational: too many decimal digits");
        bool neg = !whole.empty() && whole[0] == '-';
        int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        int64_t den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        int64_t f = frac.empty() ? 0 : std::stoll(frac);
        if (w < 0) w = -w;
        int64_t n = w * den + f;
        return Rational(neg ? -n : n, den);
    }
    return Rational(std::stoll(s));
}

/// Smallest k >= 0 with 2^k >= x (x > 0). Used for ceil(log2 D) bounds.
inline int ceil_log2(const Rational& x) {
    if (x.num() <= 0) throw std::domain_error("ceil_log2: nonpositive");
    int k = 0;
    Rational p(1);
    while (p < x) {
        p *= Rational(2);
        if (++k > 62) throw std::overflow_error("ceil_log2: out of range");
    }
    return k;
}

}  // namespace recolor
