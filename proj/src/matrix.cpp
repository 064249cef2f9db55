#include "sgb/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sgb {

namespace {

void require_simple_adjacency(const DenseSymMatrix& a) {
    const int n = a.dimension;
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i) != 0.0)
            throw validation_error("adjacency has nonzero diagonal at " + std::to_string(i));
        for (int j = i + 1; j < n; ++j) {
            double v = a.at(i, j);
            if (v != 0.0 && v != 1.0)
                throw validation_error("adjacency entry not 0/1 at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
            if (v != a.at(j, i))
                throw validation_error("adjacency not symmetric at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
        }
    }
}

DenseSymMatrix star_adjacency(std::int64_t leaf_count) {
    DenseSymMatrix a(static_cast<int>(leaf_count) + 1);
    for (int leaf = 1; leaf <= leaf_count; ++leaf) a.set(0, leaf, 1.0);
    return a;
}

} // namespace

DenseSymMatrix build_matrix(const SgbGraph& graph, MatrixKind kind, int dense_limit) {
    const std::int64_t total = graph.vertex_count();
    if (total > dense_limit)
        throw validation_error("graph has " + std::to_string(total) + " vertices, above the dense limit " +
                               std::to_string(dense_limit) + "; use component-wise numeric path");
    DenseSymMatrix adj(static_cast<int>(total));
    const std::int64_t pair_count = graph.pair_vertex_count;
    for (std::int64_t p = 0; p < pair_count; ++p) {
        int sub = graph.neighbor_of_pair[p];
        adj.set(static_cast<int>(p), static_cast<int>(pair_count + sub), 1.0);
    }
    if (kind == MatrixKind::adjacency) return adj;
    return matrix_from_adjacency(adj, kind);
}

DenseSymMatrix matrix_from_adjacency(const DenseSymMatrix& adjacency, MatrixKind kind) {
    require_simple_adjacency(adjacency);
    const int n = adjacency.dimension;
    if (kind == MatrixKind::common_neighborhood) return cn_matrix(adjacency);
    if (kind == MatrixKind::adjacency) return adjacency;
    DenseSymMatrix out = adjacency;
    const double sign = kind == MatrixKind::laplacian ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
        double deg = 0.0;
        for (int j = 0; j < n; ++j) deg += adjacency.at(i, j);
        for (int j = 0; j < n; ++j)
            out.set(i, j, sign * adjacency.at(i, j));
        out.set(i, i, deg);
    }
    return out;
}

DenseSymMatrix cn_matrix(const DenseSymMatrix& adjacency) {
    require_simple_adjacency(adjacency);
    const int n = adjacency.dimension;
    DenseSymMatrix cn(n);
    for (int i = 0; i < n; ++i) {
        const double* row_i = &adjacency.data[std::size_t(i) * n];
        for (int j = i + 1; j < n; ++j) {
            const double* row_j = &adjacency.data[std::size_t(j) * n];
            double c = 0.0;
            for (int k = 0; k < n; ++k) c += row_i[k] * row_j[k];
            cn.set(i, j, c);
        }
    }
    return cn;
}

DenseSymMatrix common_neighborhood_graph(const DenseSymMatrix& adjacency) {
    DenseSymMatrix cn = cn_matrix(adjacency);
    const int n = cn.dimension;
    DenseSymMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cn.at(i, j) >= 1.0) out.set(i, j, 1.0);
    return out;
}

std::vector<double> numeric_eigenvalues(const DenseSymMatrix& m, const JacobiOptions& opt) {
    if (opt.tol <= 0) throw validation_error("tolerance must be positive");
    const int n = m.dimension;
    std::vector<double> a = m.data;
    auto at = [&](int i, int j) -> double& { return a[std::size_t(i) * n + j]; };

    double frob = 0.0;
    for (double v : a) frob += v * v;
    frob = std::sqrt(frob);

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    const double target = opt.tol * frob;
    int sweep = 0;
    if (frob > 0.0) {
        while (off_norm() > target) {
            if (++sweep > opt.max_sweeps)
                throw numeric_error("jacobi eigensolver did not converge in " +
                                    std::to_string(opt.max_sweeps) + " sweeps (dim " +
                                    std::to_string(n) + ")");
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    double apq = at(p, q);
                    if (std::abs(apq) <= 1e-300) continue;
                    double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                    double t = (theta >= 0 ? 1.0 : -1.0) /
                               (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    double c = 1.0 / std::sqrt(t * t + 1.0);
                    double s = t * c;

                    double* rp = &a[std::size_t(p) * n];
                    double* rq = &a[std::size_t(q) * n];
                    for (int k = 0; k < n; ++k) {
                        double akp = rp[k];
                        double akq = rq[k];
                        rp[k] = c * akp - s * akq;
                        rq[k] = s * akp + c * akq;
                    }
                    for (int k = 0; k < n; ++k) {
                        double apk = at(k, p);
                        double aqk = at(k, q);
                        at(k, p) = c * apk - s * aqk;
                        at(k, q) = s * apk + c * aqk;
                    }
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

std::vector<double> numeric_spectrum(const SgbGraph& graph, MatrixKind kind,
                                     const JacobiOptions& opt) {
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(graph.vertex_count()));
    for (const auto& leaves : graph.leaves_of_subgroup) {
        DenseSymMatrix adj = star_adjacency(static_cast<std::int64_t>(leaves.size()));
        DenseSymMatrix m = matrix_from_adjacency(adj, kind);
        std::vector<double> eig = numeric_eigenvalues(m, opt);
        all.insert(all.end(), eig.begin(), eig.end());
    }
    std::sort(all.begin(), all.end(), std::greater<double>());
    return all;
}

} // namespace sgb
