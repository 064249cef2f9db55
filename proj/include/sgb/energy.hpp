#ifndef SGB_ENERGY_HPP
#define SGB_ENERGY_HPP

#include <cstdint>

#include "sgb/spectrum.hpp"

namespace sgb {

// The four graph energies as exact radical sums. Floats are derived on
// demand; regressions against known closed forms stay exact.
struct EnergyReport {
    std::int64_t vertex_count = 0;
    std::int64_t edge_count = 0;
    RadicalSum adjacency_energy;   // E
    RadicalSum laplacian_energy;   // LE
    RadicalSum signless_energy;    // LE+
    RadicalSum cn_energy;          // E_CN
};

struct ClassificationFlags {
    bool hypoenergetic = false;
    bool hyperenergetic = false;
    bool l_hyperenergetic = false;
    bool q_hyperenergetic = false;
    bool cn_hyperenergetic = false;
    bool ele_holds = false;

    friend bool operator==(const ClassificationFlags& a, const ClassificationFlags& b) {
        return a.hypoenergetic == b.hypoenergetic && a.hyperenergetic == b.hyperenergetic &&
               a.l_hyperenergetic == b.l_hyperenergetic &&
               a.q_hyperenergetic == b.q_hyperenergetic &&
               a.cn_hyperenergetic == b.cn_hyperenergetic && a.ele_holds == b.ele_holds;
    }
    friend bool operator!=(const ClassificationFlags& a, const ClassificationFlags& b) {
        return !(a == b);
    }
};

// Sum of |eigenvalue| over the multiset.
RadicalSum adjacency_energy(const SpectrumMultiset& s);

// Sum of |eigenvalue - 2m/n|; serves both the Laplacian and the signless
// Laplacian spectra, which share this form.
RadicalSum laplacian_style_energy(const SpectrumMultiset& s, std::int64_t edge_count,
                                  std::int64_t vertex_count);

RadicalSum cn_energy(const SpectrumMultiset& s);

struct CompleteGraphEnergies {
    Frac adjacency;  // 2(n-1), shared by LE and LE+
    Frac cn;         // 2(n-1)(n-2)
};
CompleteGraphEnergies complete_graph_reference(std::int64_t n);

// Exact three-way comparison when both sides are rational or identical;
// otherwise floats with a guard band. A difference inside the band is
// signalled as indeterminate, never silently resolved.
int compare_energy_values(const RadicalSum& a, const RadicalSum& b, double guard_band = 1e-9);

// Flags from the energies and the complete-graph references; strict
// inequalities throughout, boundary equality classifies as false.
ClassificationFlags classify(const EnergyReport& report);

EnergyReport energy_report_from_spectra(const SpectrumMultiset& adjacency,
                                        const SpectrumMultiset& laplacian,
                                        const SpectrumMultiset& signless,
                                        const SpectrumMultiset& cn, std::int64_t edge_count,
                                        std::int64_t vertex_count);

EnergyReport energy_report_of(const ComponentSummary& summary);

} // namespace sgb

#endif
