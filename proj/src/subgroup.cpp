#include "sgb/subgroup.hpp"

#include <algorithm>
#include <bit>

namespace sgb {

int ElementSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::vector<int> ElementSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < universe_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

bool ElementSet::lex_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a.words_[w] & low) != 0;
        }
    }
    return false;
}

namespace {

// Closure of a seed set under products and inverses. Every pair of closed
// elements is multiplied both ways once the later of the two is reached.
Subgroup close(const FiniteGroup& g, std::vector<int> seed) {
    ElementSet members(g.order());
    std::vector<int> elems;
    auto push = [&](int x) {
        if (!members.contains(x)) {
            members.insert(x);
            elems.push_back(x);
        }
    };
    push(g.identity());
    for (int x : seed) push(x);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        int x = elems[i];
        push(g.inverse(x));
        for (std::size_t j = 0; j <= i && j < elems.size(); ++j) {
            push(g.mul(x, elems[j]));
            push(g.mul(elems[j], x));
        }
    }
    Subgroup s;
    s.members = std::move(members);
    s.order = static_cast<int>(elems.size());
    return s;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return ElementSet::lex_less(a.members, b.members);
}

} // namespace

Subgroup generated_subgroup(const FiniteGroup& g, GroupElement a, GroupElement b) {
    if (a < 0 || a >= g.order() || b < 0 || b >= g.order())
        throw validation_error("generator index out of range");
    return close(g, {a, b});
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g) {
    std::vector<Subgroup> subs;
    auto add = [&](Subgroup s) {
        for (const auto& t : subs)
            if (t.members == s.members) return false;
        subs.push_back(std::move(s));
        return true;
    };

    add(close(g, {}));
    for (int x = 0; x < g.order(); ++x) add(close(g, {x}));

    // Join closure: pair every subgroup against every earlier one; new
    // joins extend the loop until fixpoint.
    for (std::size_t i = 1; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<int> seed = subs[i].members.members();
            auto other = subs[j].members.members();
            seed.insert(seed.end(), other.begin(), other.end());
            add(close(g, std::move(seed)));
        }
    }

    std::sort(subs.begin(), subs.end(), canonical_less);
    SubgroupLattice lat;
    lat.subgroups = std::move(subs);
    return lat;
}

int subgroup_index(const SubgroupLattice& lat, const Subgroup& s) {
    auto it = std::lower_bound(lat.subgroups.begin(), lat.subgroups.end(), s, canonical_less);
    if (it != lat.subgroups.end() && it->members == s.members)
        return static_cast<int>(it - lat.subgroups.begin());
    throw validation_error("not a subgroup of this lattice");
}

bool is_subgroup_set(const FiniteGroup& g, const ElementSet& members) {
    if (!members.contains(g.identity())) return false;
    auto elems = members.members();
    for (int x : elems) {
        if (!members.contains(g.inverse(x))) return false;
        for (int y : elems)
            if (!members.contains(g.mul(x, y))) return false;
    }
    return true;
}

} // namespace sgb
