#include "sgb/group.hpp"

#include <fstream>
#include <sstream>

namespace sgb {

namespace {

std::string power_label(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string word_label(int i, int j) {
    std::string a = power_label("a", i);
    std::string b = j ? "b" : "";
    if (a.empty() && b.empty()) return "e";
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + " " + b;
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels)
    : cayley_(std::move(cayley)), labels_(std::move(labels)) {
    const std::size_t n = cayley_.size();
    if (n == 0) throw validation_error("group order must be positive");
    for (std::size_t r = 0; r < n; ++r) {
        if (cayley_[r].size() != n)
            throw validation_error("cayley table is not square: row " + std::to_string(r) +
                                   " has " + std::to_string(cayley_[r].size()) + " entries, expected " +
                                   std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) {
            int v = cayley_[r][c];
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw validation_error("cayley entry out of range at (" + std::to_string(r) + "," +
                                       std::to_string(c) + "): " + std::to_string(v));
        }
    }
    order_ = static_cast<int>(n);

    // Latin-square check: every row and column is a permutation.
    std::vector<char> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t c = 0; c < n; ++c) {
            if (seen[cayley_[r][c]])
                throw validation_error("row " + std::to_string(r) +
                                       " is not a permutation (repeated entry " +
                                       std::to_string(cayley_[r][c]) + "): latin-square failure");
            seen[cayley_[r][c]] = 1;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
            if (seen[cayley_[r][c]])
                throw validation_error("column " + std::to_string(c) +
                                       " is not a permutation (repeated entry " +
                                       std::to_string(cayley_[r][c]) + "): latin-square failure");
            seen[cayley_[r][c]] = 1;
        }
    }

    // Identity is detected, not assumed at index 0.
    identity_ = -1;
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = cayley_[e][x] == static_cast<int>(x) && cayley_[x][e] == static_cast<int>(x);
        if (ok) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) throw validation_error("no identity element");

    inverse_.assign(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (cayley_[x][y] == identity_ && cayley_[y][x] == identity_) {
                inverse_[x] = static_cast<int>(y);
                break;
            }
        }
        if (inverse_[x] < 0)
            throw validation_error("element " + std::to_string(x) + " has no inverse");
    }

    // Exhaustive associativity check, O(n^3); cheap at desk scale.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (cayley_[cayley_[x][y]][z] != cayley_[x][cayley_[y][z]])
                    throw validation_error("associativity failure at (" + std::to_string(x) + "," +
                                           std::to_string(y) + "," + std::to_string(z) + ")");

    if (labels_.empty()) {
        labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels_[i] = std::to_string(i);
    } else if (labels_.size() != n) {
        throw validation_error("label list size does not match group order");
    }
}

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw validation_error("cyclic group needs order >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : power_label("a", i);
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup make_dihedral(int n) {
    if (n < 1) throw validation_error("dihedral parameter must be >= 1");
    const int ord = 2 * n;
    auto idx = [n](int i, int j) { return j * n + ((i % n) + n) % n; };
    std::vector<std::vector<int>> t(ord, std::vector<int>(ord));
    std::vector<std::string> labels(ord);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) labels[idx(i, j)] = word_label(i, j);
    // a^i b^j * a^k b^l: rotations compose additively; a reflection on the
    // left conjugates the rotation exponent.
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < 2; ++l)
                for (int k = 0; k < n; ++k) {
                    int ri = j == 0 ? i + k : i - k;
                    t[idx(i, j)][idx(k, l)] = idx(ri, j ^ l);
                }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup make_dicyclic(int m) {
    if (m < 1) throw validation_error("dicyclic parameter must be >= 1");
    const int n2 = 2 * m;
    const int ord = 4 * m;
    auto idx = [n2](int i, int j) { return j * n2 + ((i % n2) + n2) % n2; };
    std::vector<std::vector<int>> t(ord, std::vector<int>(ord));
    std::vector<std::string> labels(ord);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n2; ++i) labels[idx(i, j)] = word_label(i, j);
    // Same twisting as dihedral, plus b^2 = a^m when two b's meet.
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n2; ++i)
            for (int l = 0; l < 2; ++l)
                for (int k = 0; k < n2; ++k) {
                    int ri = j == 0 ? i + k : i - k;
                    if (j == 1 && l == 1) ri += m;
                    t[idx(i, j)][idx(k, l)] = idx(ri, j ^ l);
                }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& raw) {
    return FiniteGroup(raw);
}

int element_order(const FiniteGroup& g, GroupElement x) {
    if (x < 0 || x >= g.order()) throw validation_error("element index out of range");
    int k = 1;
    GroupElement acc = x;
    while (acc != g.identity()) {
        acc = g.mul(acc, x);
        ++k;
    }
    return k;
}

FiniteGroup parse_cayley_stream(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue; // blank
            out = line;
            return true;
        }
        return false;
    };

    std::string cur;
    if (!next_line(cur)) throw parse_error(1, "empty input, expected group order");
    int n = 0;
    {
        std::istringstream ss(cur);
        std::string tail;
        if (!(ss >> n) || n < 1 || (ss >> tail))
            throw parse_error(lineno, "expected a single positive order, got '" + cur + "'");
    }

    std::vector<std::vector<int>> table(n);
    for (int r = 0; r < n; ++r) {
        if (!next_line(cur))
            throw parse_error(lineno + 1, "unexpected end of input, expected table row " +
                                              std::to_string(r));
        std::istringstream ss(cur);
        int v;
        while (ss >> v) table[r].push_back(v);
        if (!ss.eof())
            throw parse_error(lineno, "non-numeric token in table row " + std::to_string(r));
        if (static_cast<int>(table[r].size()) != n)
            throw parse_error(lineno, "table row " + std::to_string(r) + " has " +
                                          std::to_string(table[r].size()) + " entries, expected " +
                                          std::to_string(n));
        for (int v2 : table[r])
            if (v2 < 0 || v2 >= n)
                throw parse_error(lineno, "entry " + std::to_string(v2) + " out of range [0," +
                                              std::to_string(n) + ")");
    }

    std::vector<std::string> labels;
    while (next_line(cur)) {
        std::istringstream ss(cur);
        int idx;
        if (!(ss >> idx) || idx < 0 || idx >= n)
            throw parse_error(lineno, "expected 'index label' with index in [0," +
                                          std::to_string(n) + ")");
        std::string lab;
        std::getline(ss, lab);
        std::size_t a = lab.find_first_not_of(" \t");
        if (a == std::string::npos)
            throw parse_error(lineno, "label line has no label text");
        std::size_t b = lab.find_last_not_of(" \t\r");
        if (labels.empty()) labels.assign(n, "");
        if (!labels[idx].empty())
            throw parse_error(lineno, "duplicate label for element " + std::to_string(idx));
        labels[idx] = lab.substr(a, b - a + 1);
    }
    if (!labels.empty())
        for (int i = 0; i < n; ++i)
            if (labels[i].empty()) labels[i] = std::to_string(i);

    try {
        return FiniteGroup(std::move(table), std::move(labels));
    } catch (const validation_error& e) {
        throw validation_error(std::string("cayley table rejected: ") + e.what());
    }
}

FiniteGroup load_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open cayley file: " + path);
    return parse_cayley_stream(in);
}

std::string format_cayley_table(const FiniteGroup& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (int r = 0; r < g.order(); ++r) {
        for (int c = 0; c < g.order(); ++c) {
            if (c) out << ' ';
            out << g.mul(r, c);
        }
        out << "\n";
    }
    for (int i = 0; i < g.order(); ++i) out << i << ' ' << g.label(i) << "\n";
    return out.str();
}

std::string GroupSpec::to_string() const {
    switch (family) {
        case Family::cyclic: return "cyclic:" + std::to_string(parameter);
        case Family::dihedral: return "dihedral:" + std::to_string(parameter);
        case Family::dicyclic: return "dicyclic:" + std::to_string(parameter);
        case Family::cayley_file: return "cayley:" + path;
    }
    return "?";
}

GroupSpec parse_group_spec(const std::string& token) {
    auto colon = token.find(':');
    if (colon == std::string::npos)
        throw validation_error("group spec must be family:parameter or cayley:path, got '" +
                               token + "'");
    std::string fam = token.substr(0, colon);
    std::string arg = token.substr(colon + 1);
    GroupSpec spec;
    if (fam == "cayley") {
        spec.family = GroupSpec::Family::cayley_file;
        spec.path = arg;
        if (arg.empty()) throw validation_error("cayley spec needs a file path");
        return spec;
    }
    if (fam == "cyclic") spec.family = GroupSpec::Family::cyclic;
    else if (fam == "dihedral") spec.family = GroupSpec::Family::dihedral;
    else if (fam == "dicyclic") spec.family = GroupSpec::Family::dicyclic;
    else throw validation_error("unknown group family '" + fam + "'");
    try {
        std::size_t pos = 0;
        spec.parameter = std::stoi(arg, &pos);
        if (pos != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw validation_error("group parameter must be an integer, got '" + arg + "'");
    }
    if (spec.parameter < 1) throw validation_error("group parameter must be >= 1");
    return spec;
}

FiniteGroup build_group(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupSpec::Family::cyclic: return make_cyclic(spec.parameter);
        case GroupSpec::Family::dihedral: return make_dihedral(spec.parameter);
        case GroupSpec::Family::dicyclic: return make_dicyclic(spec.parameter);
        case GroupSpec::Family::cayley_file: return load_cayley_file(spec.path);
    }
    throw validation_error("unreachable group family");
}

} // namespace sgb
