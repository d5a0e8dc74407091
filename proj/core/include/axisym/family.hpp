#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "axisym/dense.hpp"

namespace axisym {

/// State of the symmetric family, given by one real weight per diagonal
/// orbit and one complex value per off-diagonal orbit.
///
/// Conventions (1-based in formulas, 0-based in storage):
///   diagonal entry at |k j><k j|      = x[(j-k mod d)]        ("x_{m+1}")
///   entry at |k k><j j|, k != j       = y[((k-j mod d)) - 1]  ("y_m")
/// A valid state has y_m = conj(y_{d-m}), x >= 0, d * sum(x) = 1 and
/// nonnegative circulant eigenvalues lambda_j = x_1 + sum_k y_k w^{jk}.
struct FamilyState {
    int d = 0;
    std::vector<double> x;    // size d
    std::vector<Complex> y;   // size d-1

    bool shape_ok() const {
        return d >= 2 && static_cast<int>(x.size()) == d && static_cast<int>(y.size()) == d - 1;
    }
};

/// Facet member: all off-diagonal orbit values pinned to x_1.
struct FacetState {
    int d = 0;
    std::vector<double> x;    // size d

    FamilyState to_family() const;
};

/// Two-coordinate parametrization of the d=3 facet:
/// x1 = z/3, x2 = (1-z)(1+rbar)/6, x3 = (1-z)(1-rbar)/6.
struct FacetCoordsD3 {
    double z = 0.0;
    double rbar = 0.0;

    FacetState to_facet() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<double> lambda;   // circulant eigenvalues, always reported

    bool ok() const { return violations.empty(); }
};

/// Real circulant-block eigenvalues lambda_j = x_1 + sum_{k>=1} y_k w^{jk}
/// (imaginary parts cancel for conjugate-symmetric y and are dropped).
std::vector<double> circulant_eigenvalues(const FamilyState& s);

/// Report-style check of all family invariants; never throws.
ValidationReport validate(const FamilyState& s);
ValidationReport validate(const FacetState& s);

/// Dense d^2 x d^2 matrix of the state. Throws on invalid input.
DensityMatrix to_density_matrix(const FamilyState& s);
DensityMatrix to_density_matrix(const FacetState& s);

struct NotInFamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads the orbit pattern back from a dense matrix. Throws NotInFamilyError
/// naming the first offending entry if two entries of one orbit differ by
/// more than tol or an off-pattern entry exceeds tol.
FamilyState from_density_matrix(const DensityMatrix& rho, double tol);

/// The 2d-1 extremal states: d-1 diagonal ones (x_k = 1/d for one k >= 2)
/// followed by d circulant ones (lambda_j = 1 for one j; y_k = w^{-jk}/d).
std::vector<FamilyState> vertices(int d);

// Named reference states.
FamilyState phi_plus_state(int d);                // x=(1/d,0,..), y_k = 1/d
FamilyState rho_l_state(int d, int l);            // x_{l+1} = 1/d, y = 0; l in 1..d-1
FamilyState rho_sep_state(int d);                 // all x_j = y_j = 1/d^2
FamilyState rho_zero_state(int d);                // x=(1/d,0,..), y_k = -1/(d(d-1))
FamilyState rho_one_mix_state(int d);             // uniform mixture of the rho_l

/// True when every y_k equals x_1 within tol (facet membership).
bool is_facet(const FamilyState& s, double facet_tol = tol::tie);

/// Facet view of a family state; throws if not in the facet.
FacetState as_facet(const FamilyState& s, double facet_tol = tol::tie);

}  // namespace axisym
