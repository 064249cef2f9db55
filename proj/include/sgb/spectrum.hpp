#ifndef SGB_SPECTRUM_HPP
#define SGB_SPECTRUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgb/graph.hpp"
#include "sgb/radical.hpp"

namespace sgb {

enum class MatrixKind { adjacency, laplacian, signless_laplacian, common_neighborhood };

constexpr const char* matrix_kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::signless_laplacian: return "signless_laplacian";
        case MatrixKind::common_neighborhood: return "common_neighborhood";
    }
    return "?";
}

inline const MatrixKind kAllMatrixKinds[] = {
    MatrixKind::adjacency, MatrixKind::laplacian,
    MatrixKind::signless_laplacian, MatrixKind::common_neighborhood};

// Eigenvalue multiset in canonical form: values are canonical radical
// scalars, entries merged and sorted descending by numeric value.
struct SpectrumMultiset {
    struct Entry {
        RadicalScalar value;
        std::int64_t multiplicity = 0;
    };
    std::vector<Entry> entries;

    void add(const RadicalScalar& value, std::int64_t multiplicity);
    std::int64_t total_multiplicity() const;
    std::int64_t multiplicity_of(const RadicalScalar& value) const;

    // Exact spectral sums: sum of values and sum of squared values.
    RadicalSum value_sum() const;
    Frac square_sum() const;

    // The multiset of negated values (adjacency symmetry checks).
    SpectrumMultiset negated() const;

    std::vector<double> expand_sorted_desc() const;

    friend bool operator==(const SpectrumMultiset& a, const SpectrumMultiset& b) {
        if (a.entries.size() != b.entries.size()) return false;
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            if (a.entries[i].value != b.entries[i].value ||
                a.entries[i].multiplicity != b.entries[i].multiplicity)
                return false;
        return true;
    }
    friend bool operator!=(const SpectrumMultiset& a, const SpectrumMultiset& b) {
        return !(a == b);
    }

    std::string to_string() const;
};

// Spectrum of the star with leaf_count leaves (leaf_count+1 vertices);
// leaf_count 0 is the isolated vertex, leaf_count 1 the two-vertex
// component. Zero-multiplicity terms are dropped and equal values merged.
SpectrumMultiset star_spectrum(MatrixKind kind, std::int64_t leaf_count);

SpectrumMultiset union_spectrum(const std::vector<SpectrumMultiset>& parts);

// Component-wise exact spectrum of a star forest.
SpectrumMultiset exact_spectrum(const ComponentSummary& summary, MatrixKind kind);

bool is_integral(const SpectrumMultiset& s);

struct SpectrumMatch {
    bool matched = false;
    double max_deviation = 0.0;
};

// Expands the exact multiset and compares elementwise against the sorted
// numeric list. Length mismatch is a hard error.
SpectrumMatch match_spectra(const SpectrumMultiset& exact, const std::vector<double>& numeric,
                            double tol);

} // namespace sgb

#endif
