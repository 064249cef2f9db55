#ifndef SGB_RADICAL_HPP
#define SGB_RADICAL_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sgb/rational.hpp"

namespace sgb {

// Pulls the largest square factor out of r (trial division). Returns
// {multiplier, squarefree part} with multiplier^2 * squarefree == r.
struct SquarefreeSplit {
    std::int64_t multiplier;
    std::int64_t squarefree;
};

inline SquarefreeSplit squarefree_split(std::int64_t r) {
    if (r < 0) throw numeric_error("negative radicand");
    if (r == 0) return {0, 1};
    std::int64_t mul = 1;
    for (std::int64_t f = 2; f * f <= r; ++f) {
        std::int64_t sq = f * f;
        while (r % sq == 0) {
            r /= sq;
            mul *= f;
        }
    }
    return {mul, r};
}

// Exact value coefficient * sqrt(radicand). Canonical: radicand squarefree
// and >= 1; a zero coefficient forces radicand 1. Equality of canonical
// forms is equality of values (sqrt of distinct squarefree integers are
// linearly independent over the rationals).
struct RadicalScalar {
    Frac coefficient;
    std::int64_t radicand = 1;

    RadicalScalar() = default;
    RadicalScalar(Frac coeff, std::int64_t rad) {
        auto split = squarefree_split(rad);
        coefficient = coeff * Frac(split.multiplier);
        radicand = split.squarefree;
        if (coefficient.is_zero()) radicand = 1;
    }

    // sqrt(r), canonicalized: sqrt(12) -> 2*sqrt(3).
    static RadicalScalar sqrt_of(std::int64_t r) { return RadicalScalar(Frac(1), r); }
    static RadicalScalar rational(Frac q) { return RadicalScalar(q, 1); }
    static RadicalScalar integer(std::int64_t n) { return RadicalScalar(Frac(n), 1); }

    bool is_zero() const { return coefficient.is_zero(); }
    bool is_rational() const { return radicand == 1; }
    bool is_integer() const { return radicand == 1 && coefficient.is_integer(); }

    double to_double() const {
        double v = coefficient.to_double();
        if (radicand != 1) v *= std::sqrt(static_cast<double>(radicand));
        return v;
    }

    RadicalScalar negated() const {
        RadicalScalar s;
        s.coefficient = -coefficient;
        s.radicand = coefficient.is_zero() ? 1 : radicand;
        return s;
    }
    RadicalScalar abs_value() const { return coefficient.num < 0 ? negated() : *this; }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
        return a.coefficient == b.coefficient && a.radicand == b.radicand;
    }
    friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

    // Exact order by numeric value: signs first, then squared magnitudes.
    static int compare(const RadicalScalar& a, const RadicalScalar& b) {
        int sa = a.coefficient.num < 0 ? -1 : (a.coefficient.num > 0 ? 1 : 0);
        int sb = b.coefficient.num < 0 ? -1 : (b.coefficient.num > 0 ? 1 : 0);
        if (sa != sb) return sa < sb ? -1 : 1;
        if (sa == 0) return 0;
        Frac qa = a.coefficient * a.coefficient * Frac(a.radicand);
        Frac qb = b.coefficient * b.coefficient * Frac(b.radicand);
        if (qa == qb) return 0;
        int mag = qa < qb ? -1 : 1;
        return sa > 0 ? mag : -mag;
    }

    std::string to_string() const {
        if (radicand == 1) return coefficient.to_string();
        std::string c;
        if (coefficient == Frac(1)) c = "";
        else if (coefficient == Frac(-1)) c = "-";
        else c = coefficient.to_string() + "*";
        return c + "sqrt(" + std::to_string(radicand) + ")";
    }
};

// Sum of radical terms with pairwise distinct radicands, kept sorted by
// radicand. The canonical zero is the empty sum.
struct RadicalSum {
    std::vector<RadicalScalar> terms;

    RadicalSum() = default;
    RadicalSum(const RadicalScalar& t) { add(t); }
    RadicalSum(Frac q) { add(RadicalScalar::rational(q)); }

    void add(const RadicalScalar& t) {
        if (t.is_zero()) return;
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (it->radicand == t.radicand) {
                it->coefficient += t.coefficient;
                if (it->coefficient.is_zero()) terms.erase(it);
                return;
            }
            if (it->radicand > t.radicand) {
                terms.insert(it, t);
                return;
            }
        }
        terms.push_back(t);
    }
    void add(const RadicalSum& s) {
        for (const auto& t : s.terms) add(t);
    }
    void add_scaled(const RadicalScalar& t, std::int64_t k) {
        RadicalScalar u = t;
        u.coefficient *= Frac(k);
        add(u);
    }

    bool is_zero() const { return terms.empty(); }
    bool is_rational() const { return terms.empty() || (terms.size() == 1 && terms[0].radicand == 1); }
    Frac as_fraction() const {
        if (terms.empty()) return Frac(0);
        if (!is_rational()) throw numeric_error("radical sum is not rational: " + to_string());
        return terms[0].coefficient;
    }

    double to_double() const {
        double v = 0.0;
        for (const auto& t : terms) v += t.to_double();
        return v;
    }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms == b.terms; }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto& t = terms[i];
            if (i == 0) {
                out += t.to_string();
            } else if (t.coefficient.num < 0) {
                out += " - " + t.negated().to_string();
            } else {
                out += " + " + t.to_string();
            }
        }
        return out;
    }
};

} // namespace sgb

#endif
