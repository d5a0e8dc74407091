#pragma once

#include <vector>

#include "axisym/dense.hpp"
#include "axisym/family.hpp"

namespace axisym {

/// Clock matrix, Z|j> = w^j |j> with w = exp(2 pi i / d).
ComplexMatrix weyl_z(int d);

/// Shift matrix, X|j> = |j+1 mod d>.
ComplexMatrix weyl_x(int d);

/// Displacement operator D_{jk} = Z^j X^k exp(-i pi j k / d).
/// The same square-root phase exp(-i pi jk/d) is used for every d; only the
/// moduli of Bloch coefficients enter the criteria below, so the choice is
/// free of consequence there.
ComplexMatrix displacement(int d, int j, int k);

/// |phi+_d> as a d^2 vector in the composite basis.
Eigen::VectorXcd phi_plus_vector(int d);

/// Maximally entangled basis vector |phi_kl> = (Z^k (x) X^l) |phi+_d>.
Eigen::VectorXcd bell_vector(int d, int k, int l);

/// All d^2 basis states, indexed [k*d + l].
std::vector<Eigen::VectorXcd> bell_basis(int d);

/// Coefficients of a facet state in the D_{ab} (x) D*_{ab} operator basis:
/// rho = sum_{ab} c(a,b) D_{ab} (x) D*_{ab}.
struct BlochCoeffs {
    int d = 0;
    ComplexMatrix c;   // d x d, index (a, b)
};

BlochCoeffs bloch_coeffs(const FacetState& s);

/// Dense matrix rebuilt from Bloch coefficients.
ComplexMatrix bloch_reconstruct(const BlochCoeffs& bc);

/// CCNR value d * sum_{ab} |c_ab|; equals the realignment trace norm on the
/// facet (the factor d compensates the non-unit normalization of the basis,
/// Tr D^dag D = d).
double ccnr_via_bloch(const FacetState& s);

}  // namespace axisym
