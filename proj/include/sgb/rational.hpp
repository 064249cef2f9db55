#ifndef SGB_RATIONAL_HPP
#define SGB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "sgb/errors.hpp"

namespace sgb {

// Exact rational with 64-bit numerator/denominator, always reduced and with
// den > 0. Intermediate products go through 128-bit arithmetic; anything
// that does not fit back into 64 bits raises numeric_error. Desk-scale
// spectra keep values far below that limit.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac() = default;
    Frac(std::int64_t n) : num(n), den(1) {}
    Frac(std::int64_t n, std::int64_t d) {
        if (d == 0) throw numeric_error("rational with zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) { nn = -nn; dd = -dd; }
        normalize_(nn, dd);
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return from_wide_(n, d);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + Frac(-b.num, b.den); }
    friend Frac operator-(const Frac& a) { return Frac(-a.num, a.den); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        __int128 n = static_cast<__int128>(a.num) * b.num;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return from_wide_(n, d);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num == 0) throw numeric_error("rational division by zero");
        __int128 n = static_cast<__int128>(a.num) * b.den;
        __int128 d = static_cast<__int128>(a.den) * b.num;
        if (d < 0) { n = -n; d = -d; }
        return from_wide_(n, d);
    }
    Frac& operator+=(const Frac& b) { return *this = *this + b; }
    Frac& operator-=(const Frac& b) { return *this = *this - b; }
    Frac& operator*=(const Frac& b) { return *this = *this * b; }

    friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

    Frac abs() const { return num < 0 ? Frac(-num, den) : *this; }

private:
    static __int128 gcd_(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
    static Frac from_wide_(__int128 n, __int128 d) {
        Frac f;
        f.normalize_(n, d);
        return f;
    }
    void normalize_(__int128 n, __int128 d) {
        __int128 g = gcd_(n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw numeric_error("rational overflow");
        num = static_cast<std::int64_t>(n);
        den = static_cast<std::int64_t>(d);
        if (num == 0) den = 1;
    }
};

} // namespace sgb

#endif
