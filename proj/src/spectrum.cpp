#include "sgb/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace sgb {

void SpectrumMultiset::add(const RadicalScalar& value, std::int64_t multiplicity) {
    if (multiplicity <= 0) return;
    // Descending order; insertion keeps the multiset canonical.
    auto it = entries.begin();
    for (; it != entries.end(); ++it) {
        int c = RadicalScalar::compare(value, it->value);
        if (c == 0) {
            it->multiplicity += multiplicity;
            return;
        }
        if (c > 0) break;
    }
    entries.insert(it, {value, multiplicity});
}

std::int64_t SpectrumMultiset::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

std::int64_t SpectrumMultiset::multiplicity_of(const RadicalScalar& value) const {
    for (const auto& e : entries)
        if (e.value == value) return e.multiplicity;
    return 0;
}

RadicalSum SpectrumMultiset::value_sum() const {
    RadicalSum s;
    for (const auto& e : entries) s.add_scaled(e.value, e.multiplicity);
    return s;
}

Frac SpectrumMultiset::square_sum() const {
    Frac s(0);
    for (const auto& e : entries) {
        Frac sq = e.value.coefficient * e.value.coefficient * Frac(e.value.radicand);
        s += sq * Frac(e.multiplicity);
    }
    return s;
}

SpectrumMultiset SpectrumMultiset::negated() const {
    SpectrumMultiset out;
    for (const auto& e : entries) out.add(e.value.negated(), e.multiplicity);
    return out;
}

std::vector<double> SpectrumMultiset::expand_sorted_desc() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(total_multiplicity()));
    for (const auto& e : entries) {
        double v = e.value.to_double();
        for (std::int64_t i = 0; i < e.multiplicity; ++i) out.push_back(v);
    }
    return out;
}

std::string SpectrumMultiset::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        out += "(" + entries[i].value.to_string() + ")^" + std::to_string(entries[i].multiplicity);
    }
    return out + "}";
}

SpectrumMultiset star_spectrum(MatrixKind kind, std::int64_t leaf_count) {
    if (leaf_count < 0) throw validation_error("negative leaf count");
    SpectrumMultiset s;
    if (leaf_count == 0) {
        s.add(RadicalScalar::integer(0), 1);
        return s;
    }
    const std::int64_t l = leaf_count;
    switch (kind) {
        case MatrixKind::adjacency:
            s.add(RadicalScalar::sqrt_of(l), 1);
            s.add(RadicalScalar::sqrt_of(l).negated(), 1);
            s.add(RadicalScalar::integer(0), l - 1);
            break;
        case MatrixKind::laplacian:
        case MatrixKind::signless_laplacian:
            s.add(RadicalScalar::integer(0), 1);
            s.add(RadicalScalar::integer(1), l - 1);
            s.add(RadicalScalar::integer(l + 1), 1);
            break;
        case MatrixKind::common_neighborhood:
            s.add(RadicalScalar::integer(0), 1);
            s.add(RadicalScalar::integer(-1), l - 1);
            s.add(RadicalScalar::integer(l - 1), 1);
            break;
    }
    return s;
}

SpectrumMultiset union_spectrum(const std::vector<SpectrumMultiset>& parts) {
    SpectrumMultiset out;
    for (const auto& p : parts)
        for (const auto& e : p.entries) out.add(e.value, e.multiplicity);
    return out;
}

SpectrumMultiset exact_spectrum(const ComponentSummary& summary, MatrixKind kind) {
    SpectrumMultiset out;
    for (const auto& star : summary.stars) {
        SpectrumMultiset one = star_spectrum(kind, star.leaf_count);
        for (const auto& e : one.entries) out.add(e.value, e.multiplicity * star.multiplicity);
    }
    return out;
}

bool is_integral(const SpectrumMultiset& s) {
    for (const auto& e : s.entries)
        if (!e.value.is_integer()) return false;
    return true;
}

SpectrumMatch match_spectra(const SpectrumMultiset& exact, const std::vector<double>& numeric,
                            double tol) {
    if (tol <= 0) throw validation_error("tolerance must be positive");
    if (exact.total_multiplicity() != static_cast<std::int64_t>(numeric.size()))
        throw numeric_error("spectrum length mismatch: exact has " +
                            std::to_string(exact.total_multiplicity()) + " values, numeric has " +
                            std::to_string(numeric.size()));
    std::vector<double> want = exact.expand_sorted_desc();
    std::vector<double> got = numeric;
    std::sort(got.begin(), got.end(), std::greater<double>());
    SpectrumMatch m;
    for (std::size_t i = 0; i < want.size(); ++i)
        m.max_deviation = std::max(m.max_deviation, std::abs(want[i] - got[i]));
    m.matched = m.max_deviation <= tol;
    return m;
}

} // namespace sgb
