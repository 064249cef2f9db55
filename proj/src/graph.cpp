#include "sgb/graph.hpp"

#include <algorithm>
#include <string>

namespace sgb {

void ComponentSummary::add(std::int64_t leaf_count, std::int64_t multiplicity) {
    if (multiplicity <= 0) return;
    for (auto it = stars.begin(); it != stars.end(); ++it) {
        if (it->leaf_count == leaf_count) {
            it->multiplicity += multiplicity;
            return;
        }
        if (it->leaf_count > leaf_count) {
            stars.insert(it, {leaf_count, multiplicity});
            return;
        }
    }
    stars.push_back({leaf_count, multiplicity});
}

std::int64_t ComponentSummary::component_count() const {
    std::int64_t c = 0;
    for (const auto& s : stars) c += s.multiplicity;
    return c;
}

std::int64_t ComponentSummary::vertex_count() const {
    std::int64_t c = 0;
    for (const auto& s : stars) c += s.multiplicity * (s.leaf_count + 1);
    return c;
}

std::int64_t ComponentSummary::leaf_total() const {
    std::int64_t c = 0;
    for (const auto& s : stars) c += s.multiplicity * s.leaf_count;
    return c;
}

std::int64_t ComponentSummary::isolated_count() const {
    for (const auto& s : stars)
        if (s.leaf_count == 0) return s.multiplicity;
    return 0;
}

std::string ComponentSummary::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < stars.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(stars[i].leaf_count) + "x" + std::to_string(stars[i].multiplicity);
    }
    return out + "}";
}

SgbGraph build_sgb(const FiniteGroup& g, const SubgroupLattice& lat) {
    const int n = g.order();
    SgbGraph graph;
    graph.group_order = n;
    graph.pair_vertex_count = static_cast<std::int64_t>(n) * n;
    graph.subgroup_vertex_count = lat.size();
    graph.neighbor_of_pair.assign(graph.pair_vertex_count, -1);
    graph.leaves_of_subgroup.assign(lat.size(), {});

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Subgroup h = generated_subgroup(g, a, b);
            int pos = subgroup_index(lat, h);
            int pid = graph.pair_id(a, b);
            graph.neighbor_of_pair[pid] = pos;
            graph.leaves_of_subgroup[pos].push_back(pid);
        }
    }
    return graph;
}

ComponentSummary decompose_components(const SgbGraph& graph) {
    ComponentSummary summary;
    for (const auto& leaves : graph.leaves_of_subgroup)
        summary.add(static_cast<std::int64_t>(leaves.size()));
    return summary;
}

bool signature_equal(const ComponentSummary& x, const ComponentSummary& y) {
    if (x.stars.size() != y.stars.size()) return false;
    for (std::size_t i = 0; i < x.stars.size(); ++i)
        if (x.stars[i].leaf_count != y.stars[i].leaf_count ||
            x.stars[i].multiplicity != y.stars[i].multiplicity)
            return false;
    return true;
}

} // namespace sgb
