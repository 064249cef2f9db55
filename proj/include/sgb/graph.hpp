#ifndef SGB_GRAPH_HPP
#define SGB_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "sgb/subgroup.hpp"

namespace sgb {

// Bipartite graph on ordered pairs (a,b) and subgroup vertices; the pair
// (a,b) is joined to the one subgroup it generates. Pair vertex (a,b) has
// id a*|G|+b; subgroup vertices follow in lattice order. Every pair vertex
// has degree exactly 1, so components are stars centred on subgroups
// (possibly isolated when a subgroup is not generated by any pair).
struct SgbGraph {
    int group_order = 0;
    std::int64_t pair_vertex_count = 0;
    int subgroup_vertex_count = 0;
    std::vector<int> neighbor_of_pair;          // pair id -> subgroup position
    std::vector<std::vector<int>> leaves_of_subgroup; // subgroup position -> pair ids

    std::int64_t vertex_count() const { return pair_vertex_count + subgroup_vertex_count; }
    std::int64_t edge_count() const { return pair_vertex_count; }
    int pair_id(GroupElement a, GroupElement b) const { return a * group_order + b; }
};

// Leaf-count multiset of the star decomposition: (leaf_count, multiplicity)
// entries sorted by leaf count. leaf_count 0 marks isolated subgroup
// vertices, leaf_count 1 the two-vertex components.
struct ComponentSummary {
    struct Star {
        std::int64_t leaf_count = 0;
        std::int64_t multiplicity = 0;
    };
    std::vector<Star> stars;

    void add(std::int64_t leaf_count, std::int64_t multiplicity = 1);
    std::int64_t component_count() const;
    std::int64_t vertex_count() const;  // sum multiplicity * (leaf_count + 1)
    std::int64_t leaf_total() const;    // sum multiplicity * leaf_count
    std::int64_t isolated_count() const;
    std::string to_string() const;
};

SgbGraph build_sgb(const FiniteGroup& g, const SubgroupLattice& lat);
ComponentSummary decompose_components(const SgbGraph& graph);
bool signature_equal(const ComponentSummary& x, const ComponentSummary& y);

} // namespace sgb

#endif
