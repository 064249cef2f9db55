#ifndef SGB_GROUP_HPP
#define SGB_GROUP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sgb/errors.hpp"

namespace sgb {

// Element ids are plain indices into the Cayley table.
using GroupElement = int;

// A finite group given by its dense Cayley table. Construction validates
// the full set of group axioms (identity, inverses, Latin rows/columns,
// associativity), so any live FiniteGroup is a genuine group. Immutable
// after construction; safe for concurrent reads.
class FiniteGroup {
public:
    // Validates and adopts the table; labels are optional display strings.
    explicit FiniteGroup(std::vector<std::vector<int>> cayley,
                         std::vector<std::string> labels = {});

    int order() const { return order_; }
    GroupElement identity() const { return identity_; }
    GroupElement mul(GroupElement x, GroupElement y) const { return cayley_[x][y]; }
    GroupElement inverse(GroupElement x) const { return inverse_[x]; }
    const std::vector<std::vector<int>>& cayley() const { return cayley_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(GroupElement x) const { return labels_[x]; }

private:
    int order_ = 0;
    std::vector<std::vector<int>> cayley_;
    GroupElement identity_ = 0;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

// Cyclic group C_n: cayley[i][j] = (i+j) mod n.
FiniteGroup make_cyclic(int n);

// Dihedral group of order 2n, elements a^i b^j with index j*n + i.
FiniteGroup make_dihedral(int n);

// Dicyclic group of order 4m, elements a^i b^j (i mod 2m) with index j*2m + i.
FiniteGroup make_dicyclic(int m);

// Validating constructor for an externally supplied table.
FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& raw);

// Smallest k >= 1 with x^k = identity.
int element_order(const FiniteGroup& g, GroupElement x);

// Text format: line 1 = order n, then n lines of n indices, then optional
// trailing "index label" lines. Any deviation reports the line number.
FiniteGroup parse_cayley_stream(std::istream& in);
FiniteGroup load_cayley_file(const std::string& path);
std::string format_cayley_table(const FiniteGroup& g);

// One-token group descriptor: "cyclic:N", "dihedral:N", "dicyclic:M",
// "cayley:PATH".
struct GroupSpec {
    enum class Family { cyclic, dihedral, dicyclic, cayley_file };
    Family family = Family::cyclic;
    int parameter = 1;
    std::string path;

    std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& token);
FiniteGroup build_group(const GroupSpec& spec);

} // namespace sgb

#endif
