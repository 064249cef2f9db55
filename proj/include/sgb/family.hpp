#ifndef SGB_FAMILY_HPP
#define SGB_FAMILY_HPP

#include <array>
#include <string>
#include <vector>

#include "sgb/energy.hpp"
#include "sgb/matrix.hpp"

namespace sgb {

// The four group families with closed-form predictions: dihedral of order
// 2p and 2p^2, dicyclic of order 4p and 4p^2, p prime. The dicyclic
// families branch at p = 2.
enum class Family { D2p, D2p2, Q4p, Q4p2 };

const char* family_name(Family f);
Family parse_family(const std::string& token);

struct FamilyId {
    Family family = Family::D2p;
    std::int64_t p = 3;

    std::string to_string() const {
        return std::string(family_name(family)) + "[p=" + std::to_string(p) + "]";
    }
};

bool is_prime(std::int64_t n);

// Throws with the violated constraint named: p must be prime, and the D2p
// closed forms need p >= 3.
void validate_family(const FamilyId& f);

std::int64_t family_group_order(const FamilyId& f);
FiniteGroup build_family_group(const FamilyId& f);

// Star decomposition of B(G) for the family, one star per subgroup. For
// Q4p2 with p >= 3 the decomposition follows the actual subgroup lattice,
// which differs from the stated one (see known_notes_of and
// displayed_structure_of).
ComponentSummary structure_of(const FamilyId& f);

// The decomposition as stated, transcribed verbatim. Coincides with
// structure_of except on the Q4p2, p >= 3 branch.
ComponentSummary displayed_structure_of(const FamilyId& f);

// Closed-form spectrum, assembled from structure_of and the star spectra.
SpectrumMultiset spectrum_of(const FamilyId& f, MatrixKind kind);

// The spectrum multiset as printed in the family statements, transcribed
// entry by entry. Used as a regression check against spectrum_of; when the
// two differ, verify_family records a note.
SpectrumMultiset displayed_spectrum(const FamilyId& f, MatrixKind kind);

// Closed-form energies; LE and LE+ coincide for every family.
EnergyReport energies_of(const FamilyId& f);

// Constant prediction for every admissible family instance.
ClassificationFlags predicted_classification(const FamilyId& f);

// Fixed caveats attached to specific family instances.
std::vector<std::string> known_notes_of(const FamilyId& f);

struct VerificationOptions {
    int max_order = 40;      // ceiling on |G| for the brute-force pipeline
    double tol = 1e-8;       // numeric spectrum match tolerance
    bool exact_only = false; // skip the Jacobi cross-check
    JacobiOptions jacobi;
};

struct KindCheck {
    bool exact_match = false;     // brute-force exact spectrum == closed form
    bool displayed_match = false; // closed form == printed statement (reporting-only)
    bool numeric_match = false;   // Jacobi eigenvalues == closed form
    double max_deviation = 0.0;
};

struct VerificationReport {
    FamilyId family;
    bool structure_match = false;
    std::array<KindCheck, 4> spectra; // indexed by MatrixKind order
    bool energy_match_adjacency = false;
    bool energy_match_laplacian = false;
    bool energy_match_signless = false;
    bool energy_match_cn = false;
    bool classification_match = false;
    bool integrality_match = false;
    bool energy_chain_holds = false; // E < |V| < LE
    bool numeric_checked = false;
    double max_deviation = 0.0;
    std::vector<std::string> notes;

    bool all_match() const;
};

// Builds the actual group, runs the brute-force pipeline and diffs every
// closed-form prediction against it.
VerificationReport verify_family(const FamilyId& f, const VerificationOptions& opt = {});

} // namespace sgb

#endif
