#ifndef SGB_REPORT_HPP
#define SGB_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgb/family.hpp"

namespace sgb {

enum class OutputFormat { json, csv, markdown };
OutputFormat parse_output_format(const std::string& token);

// One full-pipeline result for a single group, ready to serialize.
// Serialization is deterministic: fixed key order, canonical spectrum
// order, fixed float formatting.
struct AnalysisDocument {
    std::string group_spec;
    int group_order = 0;
    int subgroup_count = 0;
    std::int64_t pair_count = 0;
    std::int64_t vertex_count = 0;
    std::int64_t edge_count = 0;
    ComponentSummary summary;

    struct SpectrumBlock {
        MatrixKind kind = MatrixKind::adjacency;
        SpectrumMultiset exact;
        bool integral = false;
        bool numeric_checked = false;
        bool numeric_match = false;
        double max_deviation = 0.0;
    };
    std::vector<SpectrumBlock> spectra;

    EnergyReport energies;
    ClassificationFlags flags;

    double tol = 1e-8;
    bool exact_only = false;

    bool numeric_all_matched() const;
};

struct GroupInfoDocument {
    std::string group_spec;
    int group_order = 0;
    std::map<int, int> element_order_histogram;
    int subgroup_count = 0;
    std::vector<int> subgroup_orders;
};

// A verify batch entry: either a finished report or a per-entry error.
struct VerificationEntry {
    std::int64_t p = 0;
    std::optional<VerificationReport> report;
    std::string error;
};

struct VerificationDocument {
    Family family = Family::D2p;
    std::vector<VerificationEntry> entries;
    double tol = 1e-8;
    bool exact_only = false;

    bool all_match() const;
    bool any_inadmissible() const;
};

AnalysisDocument analyze_group(const GroupSpec& spec, const std::vector<MatrixKind>& kinds,
                               double tol, int max_order, bool exact_only);
GroupInfoDocument group_info(const GroupSpec& spec, int max_order);

std::string render_analysis(const AnalysisDocument& doc, OutputFormat format);
std::string render_group_info(const GroupInfoDocument& doc, OutputFormat format);
std::string render_verification(const VerificationDocument& doc, OutputFormat format);

} // namespace sgb

#endif
