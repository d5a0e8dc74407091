#pragma once

#include <string>
#include <vector>

#include "axisym/dense.hpp"
#include "axisym/family.hpp"

namespace axisym {

/// Bipartite pure state through its coefficient matrix, coeff(j,k) = <jk|psi>.
struct PureState {
    int d = 0;
    ComplexMatrix coeff;   // d x d

    double norm() const { return coeff.norm(); }
};

/// Number of singular values of the coefficient matrix above tol.
/// Throws if the state is not normalized within 1e-12.
int schmidt_rank(const PureState& p, double rank_tol = tol::rank);

/// Largest K detected by the fidelity witness (K-1)/d * I - |phi+><phi+|,
/// i.e. the biggest K with fidelity > (K-1)/d, clamped to [1, d].
int witness_lower_bound_from_fidelity(int d, double fidelity, double tie_tol = tol::tie);

/// Fidelity witness bound for a facet state (fidelity with phi+ is d*x_1).
int witness_lower_bound(const FacetState& s, double tie_tol = tol::tie);

/// Pure state with circulant coefficient matrix: diagonal sqrt(x_1) and
/// sign_k * sqrt(x_{k+1}) on the k-th cyclic diagonal. Twirls back to s.
PureState circulant_pure_state(const FacetState& s, const std::vector<int>& signs);

/// The x_1 on the rank-deficiency surface sqrt(x_1) = sum_k sqrt(x_{k+1}),
/// with x_2 eliminated through the normalization sum_k x_k = 1/d.
/// x_tail holds x_3..x_d; throws on an infeasible tail.
double surface_x1(int d, const std::vector<double>& x_tail);

struct SchmidtBounds {
    int lower = 1;
    int upper = 1;
    std::string lower_source;
    std::string upper_source;
};

/// Precomputed generator set for the "Schmidt number <= d-1" hull test:
/// discretized surface states, the diagonal vertices rho_l, and the
/// separable polytope corners.
class SchmidtHull {
  public:
    explicit SchmidtHull(int d, int samples_per_dim = 64);

    /// LP feasibility of s.x as a convex combination of the generators.
    bool contains(const FacetState& s, double lp_tol = 1e-9) const;

    const std::vector<std::vector<double>>& generators() const { return gens_; }

  private:
    int d_;
    std::vector<std::vector<double>> gens_;
};

/// Witness lower bound paired with the hull / separability upper bound.
SchmidtBounds schmidt_bounds(const FacetState& s, const SchmidtHull& hull);
SchmidtBounds schmidt_bounds(const FacetState& s, int samples_per_dim = 64);

}  // namespace axisym
