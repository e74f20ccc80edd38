#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fnls/vec3.hpp"

namespace fnls {

/// Uniform Cartesian grid on the cube [-L, L]^3 with n nodes per axis,
/// node coordinates x_i = -L + i*h and spacing h = 2L/(n-1).
/// Values outside the cube are treated as zero (Dirichlet truncation).
struct Grid3D {
    double extent = 0.0;  ///< half-width L of the box
    int points = 0;       ///< nodes per axis, n >= 16
    double spacing = 0.0; ///< h = 2L/(n-1)

    /// Validates n >= 16 and L > 0; throws ValidationError otherwise.
    static Grid3D make(double extent, int points);

    std::size_t size() const {
        const auto n = static_cast<std::size_t>(points);
        return n * n * n;
    }
    double coord(int i) const { return -extent + spacing * i; }
    Vec3 node(int ix, int iy, int iz) const { return {coord(ix), coord(iy), coord(iz)}; }

    /// Row-major with z fastest.
    std::size_t index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * points + iy) * points + iz;
    }

    /// Node nearest to the box center ((n-1)/2 for odd n, n/2 otherwise).
    int center_index() const { return points / 2; }

    friend bool operator==(const Grid3D&, const Grid3D&) = default;
};

/// Real scalar function sampled on a Grid3D, row-major with z fastest.
struct ScalarField {
    Grid3D grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid3D& g) : grid(g), values(g.size(), 0.0) {}

    double& at(int ix, int iy, int iz) { return values[grid.index(ix, iy, iz)]; }
    double at(int ix, int iy, int iz) const { return values[grid.index(ix, iy, iz)]; }
};

/// Throws ValidationError if the value array has the wrong size or carries
/// non-finite entries.
void validate_field(const ScalarField& f);

/// Samples fn(x) at every node.
template <typename Fn>
ScalarField sample_field(const Grid3D& g, Fn&& fn) {
    ScalarField f(g);
    for (int ix = 0; ix < g.points; ++ix)
        for (int iy = 0; iy < g.points; ++iy)
            for (int iz = 0; iz < g.points; ++iz)
                f.values[g.index(ix, iy, iz)] = fn(g.node(ix, iy, iz));
    return f;
}

/// Deterministic pairwise-tree sum; the tree shape depends only on the
/// element count, never on thread count.
double pairwise_sum(std::span<const double> data);

/// h^3 * sum of node values (rectangle rule over all nodes).
double integrate(const ScalarField& f);

/// h^3-weighted inner product <f, g>.
double inner(const ScalarField& f, const ScalarField& g);

/// sqrt(<f, f>).
double l2_norm(const ScalarField& f);

/// -Laplacian by central differences of the given order (2 or 4), with zero
/// values outside the box. Output lives on the same grid.
ScalarField dirichlet_laplacian_apply(const ScalarField& f, int order);

/// Dirichlet kinetic form <f, -Lap f> with the same stencil used everywhere
/// else; nonnegative for both supported orders.
double kinetic_quadratic_form(const ScalarField& f, int order);

/// g(x) = scale^{3/2} f(scale*x + shift) by trilinear interpolation, zero
/// outside the source box. The prefactor preserves the L^2 norm exactly in
/// the continuum.
ScalarField rescale_field(const ScalarField& f, double scale, Vec3 shift, const Grid3D& target);

/// Translate by whole grid cells (dx, dy, dz nodes), zero-filling vacated
/// nodes. Used for translation pinning; no interpolation error.
ScalarField shift_whole_cells(const ScalarField& f, int dx, int dy, int dz);

/// Grid indices of the node carrying the largest value.
struct NodeIndex {
    int ix = 0, iy = 0, iz = 0;
};
NodeIndex argmax_node(const ScalarField& f);

// Elementwise kernels. All write a freshly sized output or operate on
// caller-provided storage; none mutate their inputs.

/// out = a*x + y
ScalarField axpy(double a, const ScalarField& x, const ScalarField& y);
/// out = a*x
ScalarField scaled(double a, const ScalarField& x);
/// out = x .* y
ScalarField hadamard(const ScalarField& x, const ScalarField& y);

/// Gram block G_ij = <fields[i], fields[j]> computed in one sweep with the
/// deterministic chunked tree reduction.
std::vector<double> block_gram(std::span<const ScalarField> fields);

/// Cross block C_ij = <a[i], b[j]>.
std::vector<double> block_cross(std::span<const ScalarField> a, std::span<const ScalarField> b);

/// out[j] = sum_i fields[i] * coeff[i + j*k] (column j of an k-by-m
/// coefficient matrix applied to k fields).
std::vector<ScalarField> block_combine(std::span<const ScalarField> fields,
                                       std::span<const double> coeff, int out_count);

} // namespace fnls
