#include "axisym/dense.hpp"

#include <stdexcept>
#include <string>

namespace axisym {

double hermiticity_residual(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix make_density_matrix(int d, ComplexMatrix mat, double herm_tol,
                                  double trace_tol, double psd_tol) {
    if (d < 2) throw std::invalid_argument("density matrix: local dimension must be >= 2");
    const int n = d * d;
    if (mat.rows() != n || mat.cols() != n)
        throw std::invalid_argument("density matrix: expected " + std::to_string(n) + "x" +
                                    std::to_string(n) + " matrix, got " +
                                    std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
    if (!mat.allFinite()) throw std::invalid_argument("density matrix: non-finite entries");
    if (hermiticity_residual(mat) > herm_tol)
        throw std::invalid_argument("density matrix: not Hermitian within tolerance");
    if (std::abs(mat.trace().real() - 1.0) > trace_tol || std::abs(mat.trace().imag()) > trace_tol)
        throw std::invalid_argument("density matrix: trace differs from 1");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -psd_tol)
        throw std::invalid_argument("density matrix: negative eigenvalue beyond tolerance");
    return DensityMatrix{d, std::move(mat)};
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
    const int d = rho.d;
    ComplexMatrix out(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    out(i * d + j, k * d + l) = rho.mat(i * d + l, k * d + j);
    return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
    const int d = rho.d;
    ComplexMatrix out(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    out(i * d + k, j * d + l) = rho.mat(i * d + j, k * d + l);
    return out;
}

double trace_norm(const ComplexMatrix& m) {
    if (!m.allFinite()) throw std::invalid_argument("trace_norm: non-finite entries");
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    return svd.singularValues().sum();
}

double min_eig_hermitian(const ComplexMatrix& m, double herm_tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("min_eig_hermitian: square matrix required");
    if (hermiticity_residual(m) > herm_tol)
        throw std::invalid_argument("min_eig_hermitian: input is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace axisym
