#pragma once

#include <cstddef>
#include <vector>

namespace fnls {

/// Minimal dense row-major matrix used on the public API surface (Gram
/// matrices, mixing rotations). Heavy linear algebra stays internal.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data; // row-major, rows*cols entries

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

/// Symmetric overlap matrix G_ij of an orbital family.
using GramMatrix = Matrix;

} // namespace fnls
