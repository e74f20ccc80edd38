#pragma once

#include <vector>

#include "fnls/lattice.hpp"
#include "fnls/vec3.hpp"

namespace fnls {

/// Problem definition: exponent p in (1, 5/3), coupling alpha > 0, particle
/// number lambda > 0, attraction centers, soft-core length, and the grid the
/// problem is discretized on.
struct ModelParams {
    double p = 1.5;
    double alpha = 1.0;
    double lambda = 1.0;
    std::vector<Vec3> centers;
    double softening = 0.0;   ///< s >= 0; s = 0 requires centers off the nodes
    Grid3D grid;
    int stencil_order = 4;    ///< Laplacian order shared by energy and spectra

    /// alpha^{2p-2}, the coefficient in front of the density power.
    double coupling() const;
};

/// Throws ValidationError when any ModelParams invariant fails
/// (p range, positivity, distinct centers, centers inside the box).
void validate_params(const ModelParams& params);

/// Ordered orbital family with occupation weights n_i in [0, 1],
/// sum n_i = lambda. A pure integer state has every weight equal to 1.
struct OrbitalSet {
    std::vector<ScalarField> orbitals;
    std::vector<double> occupations;

    int size() const { return static_cast<int>(orbitals.size()); }
    bool is_pure() const;
    double total_occupation() const;
};

/// Checks sizes, occupation bounds/order, and pairwise orthonormality within
/// tol_ortho. Throws ValidationError on failure.
void validate_state(const OrbitalSet& state, double tol_ortho = 1e-8);

/// Occupation vector filling whole orbitals first: N-1 ones followed by
/// lambda - N + 1 on the last slot, N the smallest integer with lambda <= N.
std::vector<double> occupations_for_lambda(double lambda);

/// One-particle density rho = sum_i n_i u_i^2 together with its mass.
struct Density {
    ScalarField rho;
    double mass = 0.0;
};

Density density_of(const OrbitalSet& state);

/// V_s(x) = -sum_k (|x - y_k|^2 + s^2)^{-1/2} sampled on the grid.
/// Throws SingularSampleError when s = 0 and a center sits on a node.
ScalarField coulomb_potential(const ModelParams& params);

/// Same potential with explicit grid/centers/softening (used for rescaled
/// coordinates where the centers differ from params.centers).
ScalarField coulomb_potential_at(const Grid3D& grid, const std::vector<Vec3>& centers,
                                 double softening);

} // namespace fnls
