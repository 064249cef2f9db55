#ifndef SGB_SUBGROUP_HPP
#define SGB_SUBGROUP_HPP

#include <cstdint>
#include <vector>

#include "sgb/group.hpp"

namespace sgb {

// Fixed-universe bit-set over element indices. Word operations make
// subgroup equality and membership cheap.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return universe_; }
    bool contains(int x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void insert(int x) { words_[x >> 6] |= std::uint64_t(1) << (x & 63); }

    int count() const;
    std::vector<int> members() const;

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

    // Lexicographic on sorted member lists, comparing sets of equal size:
    // the set containing the smallest differing element sorts first.
    static bool lex_less(const ElementSet& a, const ElementSet& b);

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Subgroup {
    ElementSet members;
    int order = 0;
};

// Flat list of all subgroups in canonical order: ascending order, then
// lexicographic member sets. Positions are stable vertex ids downstream.
struct SubgroupLattice {
    std::vector<Subgroup> subgroups;

    int size() const { return static_cast<int>(subgroups.size()); }
    const Subgroup& at(int i) const { return subgroups[i]; }
};

// Smallest subgroup containing a and b (worklist closure under products
// and inverses).
Subgroup generated_subgroup(const FiniteGroup& g, GroupElement a, GroupElement b);

// All subgroups: seed with every cyclic subgroup, close under pairwise
// joins. Any subgroup is an iterated join of cyclic subgroups of its own
// elements, so the fixpoint is complete.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g);

// Canonical position of s in lat; throws if the member set is absent
// (an upstream bug, never a data condition).
int subgroup_index(const SubgroupLattice& lat, const Subgroup& s);

// True if the member set is closed, contains the identity and inverses.
bool is_subgroup_set(const FiniteGroup& g, const ElementSet& members);

} // namespace sgb

#endif
