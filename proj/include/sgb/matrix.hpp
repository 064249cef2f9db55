#ifndef SGB_MATRIX_HPP
#define SGB_MATRIX_HPP

#include <vector>

#include "sgb/spectrum.hpp"

namespace sgb {

// Dense symmetric matrix, row-major. Symmetry is maintained by the
// constructors in this module.
struct DenseSymMatrix {
    int dimension = 0;
    std::vector<double> data;

    DenseSymMatrix() = default;
    explicit DenseSymMatrix(int dim) : dimension(dim), data(std::size_t(dim) * dim, 0.0) {}

    double at(int i, int j) const { return data[std::size_t(i) * dimension + j]; }
    void set(int i, int j, double v) {
        data[std::size_t(i) * dimension + j] = v;
        data[std::size_t(j) * dimension + i] = v;
    }
};

struct JacobiOptions {
    double tol = 1e-10;   // stop when off-diagonal norm <= tol * frobenius norm
    int max_sweeps = 100; // non-convergence past this is a hard error
};

inline constexpr int kDefaultDenseLimit = 2000;

// Whole-graph matrix of the requested kind; throws past dense_limit with a
// pointer at the component-wise path.
DenseSymMatrix build_matrix(const SgbGraph& graph, MatrixKind kind,
                            int dense_limit = kDefaultDenseLimit);

// Derives L, Q or CN from a 0/1 adjacency.
DenseSymMatrix matrix_from_adjacency(const DenseSymMatrix& adjacency, MatrixKind kind);

// CN[i][j] = number of common neighbors of i and j, zero diagonal.
// Input must be 0/1 symmetric with zero diagonal.
DenseSymMatrix cn_matrix(const DenseSymMatrix& adjacency);

// 0/1 adjacency of the derived graph with an edge wherever two vertices
// share at least one neighbor.
DenseSymMatrix common_neighborhood_graph(const DenseSymMatrix& adjacency);

// All eigenvalues by cyclic Jacobi rotations, descending order.
std::vector<double> numeric_eigenvalues(const DenseSymMatrix& m, const JacobiOptions& opt = {});

// Component-wise numeric spectrum of the whole graph: each star component
// is materialized as its own small matrix and diagonalized; results are
// pooled and sorted descending. Never consults the closed-form star
// spectra, so it is a fair cross-check for them.
std::vector<double> numeric_spectrum(const SgbGraph& graph, MatrixKind kind,
                                     const JacobiOptions& opt = {});

} // namespace sgb

#endif
