#pragma once

#include <complex>
#include <Eigen/Dense>

namespace axisym {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Default numeric tolerances used across the library.
namespace tol {
inline constexpr double herm = 1e-10;   // Hermiticity residual of density matrices
inline constexpr double trace = 1e-10;  // |trace - 1|
inline constexpr double psd = 1e-9;     // eigensolver slack for positivity
inline constexpr double tie = 1e-12;    // classification tie-breaking margin
inline constexpr double rank = 1e-9;    // singular-value cutoff for Schmidt ranks
}  // namespace tol

/// Bipartite density matrix on C^d (x) C^d.
///
/// The composite basis index for |i j> is i*d + j throughout the library;
/// mat is the d^2 x d^2 matrix in that ordering.
struct DensityMatrix {
    int d = 0;
    ComplexMatrix mat;

    int dim() const { return d * d; }
};

/// Validates Hermiticity/trace/positivity and wraps the matrix.
/// Throws std::invalid_argument when a check fails.
DensityMatrix make_density_matrix(int d, ComplexMatrix mat,
                                  double herm_tol = tol::herm,
                                  double trace_tol = tol::trace,
                                  double psd_tol = tol::psd);

/// Largest absolute deviation from Hermiticity, max_ij |m - m^dagger|.
double hermiticity_residual(const ComplexMatrix& m);

/// Partial transpose on the second subsystem:
/// entry ((i,j),(k,l)) of the result is rho((i,l),(k,j)).
ComplexMatrix partial_transpose(const DensityMatrix& rho);

/// Realignment map: entry ((i,k),(j,l)) of the result is rho((i,j),(k,l)).
ComplexMatrix realign(const DensityMatrix& rho);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
/// Throws std::invalid_argument if the input is not Hermitian within herm_tol.
double min_eig_hermitian(const ComplexMatrix& m, double herm_tol = tol::herm);

/// Kronecker product, row-major block layout (first factor selects the block).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace axisym
