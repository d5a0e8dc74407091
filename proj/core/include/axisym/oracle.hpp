#pragma once

#include <cstdint>
#include <vector>

#include "axisym/dense.hpp"

namespace axisym {

/// Rebuilds the flat state (all x_j = y_j = 1/d^2) as a uniform mixture of
/// product states |phi_b> (x) |phi_b*>, phi_b ~ sum_k (-1)^{b_k} e^{i w k}|k>,
/// averaged over all sign vectors b and a uniform grid of phase_samples
/// values of w; returns the largest entrywise deviation. The grid replaces
/// the continuous phase average exactly once phase_samples > 2(d-1).
double rho_sep_decomposition_check(int d, int phase_samples);

struct GilbertOptions {
    std::uint64_t seed = 42;
    int lmo_restarts = 2;         // random restarts of the product-state search
    int lmo_sweeps = 10;          // alternating eigenvector sweeps per restart
    int correction_interval = 10; // full weight re-optimization cadence
    int max_atoms = 300;
};

/// Upper bound on the Hilbert-Schmidt distance from rho to the separable
/// set: Frank-Wolfe over product states with pairwise steps and periodic
/// fully-corrective weight re-optimization. Nonincreasing in iters;
/// deterministic for a fixed seed.
double gilbert_distance(const DensityMatrix& rho, int iters, std::uint64_t seed = 42);
double gilbert_distance(const DensityMatrix& rho, int iters, const GilbertOptions& opt);

/// LP feasibility: can `point` be written as a convex combination of
/// `generators` within tol? Self-contained phase-1 simplex.
bool hull_membership(const std::vector<double>& point,
                     const std::vector<std::vector<double>>& generators, double lp_tol = 1e-9);

}  // namespace axisym
