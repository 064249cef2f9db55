#include "sgb/energy.hpp"

#include <cmath>

namespace sgb {

RadicalSum adjacency_energy(const SpectrumMultiset& s) {
    RadicalSum e;
    for (const auto& entry : s.entries) e.add_scaled(entry.value.abs_value(), entry.multiplicity);
    return e;
}

namespace {

// Exact sign of (q*sqrt(d) - c): signs first, then squared magnitudes. The
// two sides can only tie when both are rational (sqrt(d) is irrational for
// squarefree d > 1).
int compare_radical_to_rational(const RadicalScalar& v, const Frac& c) {
    if (v.radicand == 1) {
        if (v.coefficient == c) return 0;
        return v.coefficient < c ? -1 : 1;
    }
    int sv = v.coefficient.num < 0 ? -1 : 1;
    int sc = c.num < 0 ? -1 : (c.num > 0 ? 1 : 0);
    if (sv != sc) return sv < sc ? -1 : 1;
    Frac vsq = v.coefficient * v.coefficient * Frac(v.radicand);
    Frac csq = c * c;
    int mag = vsq < csq ? -1 : 1;
    return sv > 0 ? mag : -mag;
}

} // namespace

RadicalSum laplacian_style_energy(const SpectrumMultiset& s, std::int64_t edge_count,
                                  std::int64_t vertex_count) {
    if (vertex_count <= 0) throw validation_error("vertex count must be positive");
    if (s.total_multiplicity() != vertex_count)
        throw validation_error("spectrum has " + std::to_string(s.total_multiplicity()) +
                               " values, expected vertex count " + std::to_string(vertex_count));
    const Frac shift(2 * edge_count, vertex_count);
    RadicalSum e;
    for (const auto& entry : s.entries) {
        // |value - shift| expands to a two-term radical sum whose sign is
        // decided exactly.
        RadicalSum term;
        term.add(entry.value);
        term.add(RadicalScalar::rational(-shift));
        if (compare_radical_to_rational(entry.value, shift) < 0)
            for (auto& t : term.terms) t.coefficient = -t.coefficient;
        for (const auto& t : term.terms) e.add_scaled(t, entry.multiplicity);
    }
    return e;
}

RadicalSum cn_energy(const SpectrumMultiset& s) {
    return adjacency_energy(s);
}

CompleteGraphEnergies complete_graph_reference(std::int64_t n) {
    if (n < 1) throw validation_error("complete graph needs n >= 1");
    CompleteGraphEnergies ref;
    ref.adjacency = Frac(2 * (n - 1));
    ref.cn = Frac(2 * (n - 1)) * Frac(n - 2);
    return ref;
}

int compare_energy_values(const RadicalSum& a, const RadicalSum& b, double guard_band) {
    if (a == b) return 0;
    if (a.is_rational() && b.is_rational()) {
        Frac fa = a.as_fraction();
        Frac fb = b.as_fraction();
        if (fa == fb) return 0;
        return fa < fb ? -1 : 1;
    }
    double fa = a.to_double();
    double fb = b.to_double();
    if (std::abs(fa - fb) < guard_band)
        throw numeric_error("indeterminate comparison: |" + a.to_string() + " - " +
                            b.to_string() + "| < guard band");
    return fa < fb ? -1 : 1;
}

ClassificationFlags classify(const EnergyReport& report) {
    const RadicalSum n_value{Frac(report.vertex_count)};
    CompleteGraphEnergies ref = complete_graph_reference(report.vertex_count);
    const RadicalSum ref_e{ref.adjacency};
    const RadicalSum ref_cn{ref.cn};

    ClassificationFlags flags;
    flags.hypoenergetic = compare_energy_values(report.adjacency_energy, n_value) < 0;
    flags.hyperenergetic = compare_energy_values(report.adjacency_energy, ref_e) > 0;
    flags.l_hyperenergetic = compare_energy_values(report.laplacian_energy, ref_e) > 0;
    flags.q_hyperenergetic = compare_energy_values(report.signless_energy, ref_e) > 0;
    flags.cn_hyperenergetic = compare_energy_values(report.cn_energy, ref_cn) > 0;
    flags.ele_holds = compare_energy_values(report.adjacency_energy, report.laplacian_energy) <= 0;
    return flags;
}

EnergyReport energy_report_from_spectra(const SpectrumMultiset& adjacency,
                                        const SpectrumMultiset& laplacian,
                                        const SpectrumMultiset& signless,
                                        const SpectrumMultiset& cn, std::int64_t edge_count,
                                        std::int64_t vertex_count) {
    EnergyReport r;
    r.vertex_count = vertex_count;
    r.edge_count = edge_count;
    r.adjacency_energy = adjacency_energy(adjacency);
    r.laplacian_energy = laplacian_style_energy(laplacian, edge_count, vertex_count);
    r.signless_energy = laplacian_style_energy(signless, edge_count, vertex_count);
    r.cn_energy = cn_energy(cn);
    return r;
}

EnergyReport energy_report_of(const ComponentSummary& summary) {
    return energy_report_from_spectra(
        exact_spectrum(summary, MatrixKind::adjacency),
        exact_spectrum(summary, MatrixKind::laplacian),
        exact_spectrum(summary, MatrixKind::signless_laplacian),
        exact_spectrum(summary, MatrixKind::common_neighborhood), summary.leaf_total(),
        summary.vertex_count());
}

} // namespace sgb
