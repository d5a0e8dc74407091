#pragma once

#include <cstdint>

#include "axisym/family.hpp"
#include "axisym/schmidt.hpp"

namespace axisym {

/// Linear entropy of a pure state via the coefficient identity
/// E = sum_{jklm} |psi_jk psi_lm - psi_jm psi_lk|^2
/// (equals 2[1 - Tr(rho_A^2)] for normalized input).
double e_lin_pure(const PureState& p);

/// Pure-state preimage of a facet state under the group average: equal
/// diagonal entries sqrt(x_1) and per-orbit rows sqrt(d x_{k+1}) xi_{k,.}
/// with each xi row on the unit sphere. Real coefficients suffice for the
/// linear-entropy minimum.
struct FacetPureParams {
    int d = 0;
    std::vector<double> x;   // facet parameters, size d
    Eigen::MatrixXd xi;      // (d-1) x d, rows on unit spheres
};

PureState pure_from_params(const FacetPureParams& p);

struct ElinMin {
    double value = 0.0;
    Eigen::MatrixXd xi;      // argmin rows
};

/// Smallest linear entropy among pure states that average onto s:
/// multistart L-BFGS over sphere angles, deterministic for a fixed seed,
/// nonincreasing in restarts. The minimum vanishes only where a rank-one
/// coefficient matrix with the prescribed orbit weights exists; that set
/// lies inside {x_1 <= min x_k} but does not exhaust it.
ElinMin e_lin_tilde(const FacetState& s, int restarts = 32, std::uint64_t seed = 42);

/// Closed-form membership test x_1 <= x_k for all k >= 2 (the convex hull
/// of the zero set above, which is exactly the separable polytope).
bool zero_set_test(const FacetState& s);

/// Objective/gradient over sphere angles, exposed for testing.
namespace detail {
Eigen::VectorXd sphere_point(const Eigen::VectorXd& angles);
Eigen::VectorXd angles_from_unit(const Eigen::VectorXd& v);
double elin_objective(const FacetState& s, const Eigen::VectorXd& theta, Eigen::VectorXd* grad);
}  // namespace detail

}  // namespace axisym
