#include "sgb/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sgb/version.hpp"

namespace sgb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string fmt_approx(double v) { return fmt_double(v, "%.4f"); }

ordered_json spectrum_json(const SpectrumMultiset& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : s.entries) {
        ordered_json row;
        row["value"] = e.value.to_string();
        row["float"] = e.value.to_double();
        row["coefficient"] = e.value.coefficient.to_string();
        row["radicand"] = e.value.radicand;
        row["multiplicity"] = e.multiplicity;
        arr.push_back(row);
    }
    return arr;
}

ordered_json energy_json(const RadicalSum& e) {
    ordered_json row;
    row["exact"] = e.to_string();
    row["float"] = e.to_double();
    return row;
}

ordered_json flags_json(const ClassificationFlags& f) {
    ordered_json row;
    row["hypoenergetic"] = f.hypoenergetic;
    row["hyperenergetic"] = f.hyperenergetic;
    row["L_hyperenergetic"] = f.l_hyperenergetic;
    row["Q_hyperenergetic"] = f.q_hyperenergetic;
    row["CN_hyperenergetic"] = f.cn_hyperenergetic;
    row["ELE_holds"] = f.ele_holds;
    return row;
}

ordered_json summary_json(const ComponentSummary& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& star : s.stars) {
        ordered_json row;
        row["leaves"] = star.leaf_count;
        row["count"] = star.multiplicity;
        arr.push_back(row);
    }
    return arr;
}

ordered_json header_json(const char* command, double tol, bool exact_only) {
    ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = command;
    doc["tolerances"]["spectrum_match"] = tol;
    doc["tolerances"]["exact_only"] = exact_only;
    return doc;
}

std::string markdown_multiset(const SpectrumMultiset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ", ";
        out += "(" + s.entries[i].value.to_string() + ")^" +
               std::to_string(s.entries[i].multiplicity);
    }
    return out + "}";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

const char* energy_names[] = {"E", "LE", "LE_plus", "E_CN"};

const RadicalSum& energy_by_index(const EnergyReport& r, int i) {
    switch (i) {
        case 0: return r.adjacency_energy;
        case 1: return r.laplacian_energy;
        case 2: return r.signless_energy;
        default: return r.cn_energy;
    }
}

} // namespace

OutputFormat parse_output_format(const std::string& token) {
    if (token == "json") return OutputFormat::json;
    if (token == "csv") return OutputFormat::csv;
    if (token == "markdown") return OutputFormat::markdown;
    throw validation_error("unknown format '" + token + "', expected json|csv|markdown");
}

bool AnalysisDocument::numeric_all_matched() const {
    for (const auto& b : spectra)
        if (b.numeric_checked && !b.numeric_match) return false;
    return true;
}

bool VerificationDocument::all_match() const {
    for (const auto& e : entries)
        if (!e.report || !e.report->all_match()) return false;
    return true;
}

bool VerificationDocument::any_inadmissible() const {
    for (const auto& e : entries)
        if (!e.report) return true;
    return false;
}

AnalysisDocument analyze_group(const GroupSpec& spec, const std::vector<MatrixKind>& kinds,
                               double tol, int max_order, bool exact_only) {
    FiniteGroup group = build_group(spec);
    if (group.order() > max_order)
        throw validation_error("group order " + std::to_string(group.order()) +
                               " exceeds ceiling " + std::to_string(max_order) +
                               " (raise --max-order)");
    SubgroupLattice lattice = enumerate_subgroups(group);
    SgbGraph graph = build_sgb(group, lattice);
    ComponentSummary summary = decompose_components(graph);

    AnalysisDocument doc;
    doc.group_spec = spec.to_string();
    doc.group_order = group.order();
    doc.subgroup_count = lattice.size();
    doc.pair_count = graph.pair_vertex_count;
    doc.vertex_count = graph.vertex_count();
    doc.edge_count = graph.edge_count();
    doc.summary = summary;
    doc.tol = tol;
    doc.exact_only = exact_only;

    for (MatrixKind kind : kinds) {
        AnalysisDocument::SpectrumBlock block;
        block.kind = kind;
        block.exact = exact_spectrum(summary, kind);
        block.integral = is_integral(block.exact);
        if (!exact_only) {
            std::vector<double> numeric = numeric_spectrum(graph, kind);
            SpectrumMatch m = match_spectra(block.exact, numeric, tol);
            block.numeric_checked = true;
            block.numeric_match = m.matched;
            block.max_deviation = m.max_deviation;
        }
        doc.spectra.push_back(std::move(block));
    }

    doc.energies = energy_report_of(summary);
    doc.flags = classify(doc.energies);
    return doc;
}

GroupInfoDocument group_info(const GroupSpec& spec, int max_order) {
    FiniteGroup group = build_group(spec);
    if (group.order() > max_order)
        throw validation_error("group order " + std::to_string(group.order()) +
                               " exceeds ceiling " + std::to_string(max_order) +
                               " (raise --max-order)");
    GroupInfoDocument doc;
    doc.group_spec = spec.to_string();
    doc.group_order = group.order();
    for (int x = 0; x < group.order(); ++x) doc.element_order_histogram[element_order(group, x)]++;
    SubgroupLattice lattice = enumerate_subgroups(group);
    doc.subgroup_count = lattice.size();
    for (const auto& s : lattice.subgroups) doc.subgroup_orders.push_back(s.order);
    return doc;
}

std::string render_analysis(const AnalysisDocument& doc, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j = header_json("analyze", doc.tol, doc.exact_only);
        j["group"]["spec"] = doc.group_spec;
        j["group"]["order"] = doc.group_order;
        j["group"]["subgroups"] = doc.subgroup_count;
        j["graph"]["pair_vertices"] = doc.pair_count;
        j["graph"]["subgroup_vertices"] = doc.subgroup_count;
        j["graph"]["vertices"] = doc.vertex_count;
        j["graph"]["edges"] = doc.edge_count;
        j["graph"]["components"] = summary_json(doc.summary);
        // Subgroups below leaf count 1 are not generated by any pair.
        j["graph"]["isolated_subgroups"] = doc.summary.isolated_count();
        ordered_json spectra;
        for (const auto& b : doc.spectra) {
            ordered_json block;
            block["exact"] = spectrum_json(b.exact);
            block["integral"] = b.integral;
            block["numeric_checked"] = b.numeric_checked;
            if (b.numeric_checked) {
                block["numeric_match"] = b.numeric_match;
                block["max_deviation"] = b.max_deviation;
            }
            spectra[matrix_kind_name(b.kind)] = block;
        }
        j["spectra"] = spectra;
        for (int i = 0; i < 4; ++i)
            j["energies"][energy_names[i]] = energy_json(energy_by_index(doc.energies, i));
        j["classification"] = flags_json(doc.flags);
        return j.dump(2) + "\n";
    }

    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "section,name,value_float,coefficient,radicand,multiplicity,text\n";
        out << "group,spec,,,,," << csv_escape(doc.group_spec) << "\n";
        out << "group,order," << doc.group_order << ",,,,\n";
        out << "group,subgroups," << doc.subgroup_count << ",,,,\n";
        out << "graph,vertices," << doc.vertex_count << ",,,,\n";
        out << "graph,edges," << doc.edge_count << ",,,,\n";
        for (const auto& star : doc.summary.stars)
            out << "component,star," << star.leaf_count << ",,," << star.multiplicity << ",\n";
        for (const auto& b : doc.spectra)
            for (const auto& e : b.exact.entries)
                out << "spectrum," << matrix_kind_name(b.kind) << ","
                    << fmt_double(e.value.to_double()) << "," << e.value.coefficient.to_string()
                    << "," << e.value.radicand << "," << e.multiplicity << ","
                    << csv_escape(e.value.to_string()) << "\n";
        for (int i = 0; i < 4; ++i) {
            const RadicalSum& e = energy_by_index(doc.energies, i);
            out << "energy," << energy_names[i] << "," << fmt_double(e.to_double()) << ",,,,"
                << csv_escape(e.to_string()) << "\n";
        }
        out << "classification,hypoenergetic," << doc.flags.hypoenergetic << ",,,,\n";
        out << "classification,hyperenergetic," << doc.flags.hyperenergetic << ",,,,\n";
        out << "classification,L_hyperenergetic," << doc.flags.l_hyperenergetic << ",,,,\n";
        out << "classification,Q_hyperenergetic," << doc.flags.q_hyperenergetic << ",,,,\n";
        out << "classification,CN_hyperenergetic," << doc.flags.cn_hyperenergetic << ",,,,\n";
        out << "classification,ELE_holds," << doc.flags.ele_holds << ",,,,\n";
        return out.str();
    }

    std::ostringstream out;
    out << "# B(G) analysis: " << doc.group_spec << "\n\n";
    out << "- group order " << doc.group_order << ", " << doc.subgroup_count << " subgroups\n";
    out << "- " << doc.vertex_count << " vertices (" << doc.pair_count << " pairs + "
        << doc.subgroup_count << " subgroup vertices), " << doc.edge_count << " edges\n";
    out << "- star decomposition (leaves^multiplicity): ";
    for (std::size_t i = 0; i < doc.summary.stars.size(); ++i) {
        if (i) out << " ";
        out << doc.summary.stars[i].leaf_count << "^" << doc.summary.stars[i].multiplicity;
    }
    out << "\n\n## Spectra\n\n";
    for (const auto& b : doc.spectra) {
        out << "- " << matrix_kind_name(b.kind) << ": " << markdown_multiset(b.exact)
            << (b.integral ? "  (integral)" : "");
        if (b.numeric_checked)
            out << "  [numeric " << (b.numeric_match ? "ok" : "MISMATCH") << ", max dev "
                << fmt_double(b.max_deviation, "%.3e") << "]";
        out << "\n";
    }
    out << "\n## Energies\n\n";
    for (int i = 0; i < 4; ++i) {
        const RadicalSum& e = energy_by_index(doc.energies, i);
        out << "- " << energy_names[i] << " = " << e.to_string() << " (~" << fmt_approx(e.to_double())
            << ")\n";
    }
    out << "\n## Classification\n\n";
    out << "- hypoenergetic: " << (doc.flags.hypoenergetic ? "yes" : "no") << "\n";
    out << "- hyperenergetic: " << (doc.flags.hyperenergetic ? "yes" : "no") << "\n";
    out << "- L-hyperenergetic: " << (doc.flags.l_hyperenergetic ? "yes" : "no") << "\n";
    out << "- Q-hyperenergetic: " << (doc.flags.q_hyperenergetic ? "yes" : "no") << "\n";
    out << "- CN-hyperenergetic: " << (doc.flags.cn_hyperenergetic ? "yes" : "no") << "\n";
    out << "- E <= LE: " << (doc.flags.ele_holds ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_group_info(const GroupInfoDocument& doc, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["command"] = "group-info";
        j["group"]["spec"] = doc.group_spec;
        j["group"]["order"] = doc.group_order;
        ordered_json hist = ordered_json::array();
        for (const auto& [ord, count] : doc.element_order_histogram) {
            ordered_json row;
            row["element_order"] = ord;
            row["count"] = count;
            hist.push_back(row);
        }
        j["element_orders"] = hist;
        j["subgroups"]["count"] = doc.subgroup_count;
        j["subgroups"]["orders"] = doc.subgroup_orders;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "section,name,value\n";
        out << "group,spec," << csv_escape(doc.group_spec) << "\n";
        out << "group,order," << doc.group_order << "\n";
        for (const auto& [ord, count] : doc.element_order_histogram)
            out << "element_order," << ord << "," << count << "\n";
        out << "subgroups,count," << doc.subgroup_count << "\n";
        for (std::size_t i = 0; i < doc.subgroup_orders.size(); ++i)
            out << "subgroup_order," << i << "," << doc.subgroup_orders[i] << "\n";
        return out.str();
    }
    std::ostringstream out;
    out << "# Group info: " << doc.group_spec << "\n\n";
    out << "- order " << doc.group_order << "\n";
    out << "- element orders: ";
    bool first = true;
    for (const auto& [ord, count] : doc.element_order_histogram) {
        if (!first) out << ", ";
        out << ord << "^" << count;
        first = false;
    }
    out << "\n- " << doc.subgroup_count << " subgroups with orders: ";
    for (std::size_t i = 0; i < doc.subgroup_orders.size(); ++i) {
        if (i) out << " ";
        out << doc.subgroup_orders[i];
    }
    out << "\n";
    return out.str();
}

namespace {

ordered_json verification_entry_json(const VerificationEntry& e) {
    ordered_json row;
    row["p"] = e.p;
    if (!e.report) {
        row["admissible"] = false;
        row["error"] = e.error;
        return row;
    }
    const VerificationReport& r = *e.report;
    row["admissible"] = true;
    row["all_match"] = r.all_match();
    row["structure_match"] = r.structure_match;
    ordered_json spectra;
    for (int i = 0; i < 4; ++i) {
        ordered_json k;
        k["exact_match"] = r.spectra[i].exact_match;
        k["displayed_match"] = r.spectra[i].displayed_match;
        if (r.numeric_checked) {
            k["numeric_match"] = r.spectra[i].numeric_match;
            k["max_deviation"] = r.spectra[i].max_deviation;
        }
        spectra[matrix_kind_name(kAllMatrixKinds[i])] = k;
    }
    row["spectra"] = spectra;
    row["energies"]["E_match"] = r.energy_match_adjacency;
    row["energies"]["LE_match"] = r.energy_match_laplacian;
    row["energies"]["LE_plus_match"] = r.energy_match_signless;
    row["energies"]["E_CN_match"] = r.energy_match_cn;
    row["classification_match"] = r.classification_match;
    row["integrality_match"] = r.integrality_match;
    row["energy_chain_holds"] = r.energy_chain_holds;
    row["max_deviation"] = r.max_deviation;
    row["notes"] = r.notes;
    return row;
}

} // namespace

std::string render_verification(const VerificationDocument& doc, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j = header_json("verify", doc.tol, doc.exact_only);
        j["family"] = family_name(doc.family);
        ordered_json entries = ordered_json::array();
        for (const auto& e : doc.entries) entries.push_back(verification_entry_json(e));
        j["entries"] = entries;
        j["all_match"] = doc.all_match();
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "family,p,check,result\n";
        const std::string fam = family_name(doc.family);
        for (const auto& e : doc.entries) {
            if (!e.report) {
                out << fam << "," << e.p << ",error," << csv_escape(e.error) << "\n";
                continue;
            }
            const VerificationReport& r = *e.report;
            out << fam << "," << e.p << ",structure," << r.structure_match << "\n";
            for (int i = 0; i < 4; ++i) {
                out << fam << "," << e.p << "," << matrix_kind_name(kAllMatrixKinds[i])
                    << "_exact," << r.spectra[i].exact_match << "\n";
                if (r.numeric_checked)
                    out << fam << "," << e.p << "," << matrix_kind_name(kAllMatrixKinds[i])
                        << "_numeric," << r.spectra[i].numeric_match << "\n";
            }
            out << fam << "," << e.p << ",energies,"
                << (r.energy_match_adjacency && r.energy_match_laplacian &&
                    r.energy_match_signless && r.energy_match_cn)
                << "\n";
            out << fam << "," << e.p << ",classification," << r.classification_match << "\n";
            out << fam << "," << e.p << ",integrality," << r.integrality_match << "\n";
            out << fam << "," << e.p << ",all_match," << r.all_match() << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << "# Verification: " << family_name(doc.family) << "\n\n";
    for (const auto& e : doc.entries) {
        if (!e.report) {
            out << "- p=" << e.p << ": ERROR " << e.error << "\n";
            continue;
        }
        const VerificationReport& r = *e.report;
        out << "- p=" << e.p << ": " << (r.all_match() ? "ALL MATCH" : "MISMATCH")
            << " (structure " << (r.structure_match ? "ok" : "FAIL") << ", spectra";
        for (int i = 0; i < 4; ++i)
            out << " " << matrix_kind_name(kAllMatrixKinds[i])[0]
                << (r.spectra[i].exact_match &&
                            (!r.numeric_checked || r.spectra[i].numeric_match)
                        ? ":ok"
                        : ":FAIL");
        out << ", max dev " << fmt_double(r.max_deviation, "%.3e") << ")\n";
        for (const auto& note : r.notes) out << "  - note: " << note << "\n";
    }
    out << "\n" << (doc.all_match() ? "All entries match." : "Some entries failed.") << "\n";
    return out.str();
}

} // namespace sgb
