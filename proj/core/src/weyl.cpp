#include "axisym/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace axisym {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_dim(int d) {
    if (d < 2) throw std::invalid_argument("weyl: d must be >= 2");
}
}  // namespace

ComplexMatrix weyl_z(int d) {
    require_dim(d);
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) z(j, j) = std::polar(1.0, kTwoPi * j / d);
    return z;
}

ComplexMatrix weyl_x(int d) {
    require_dim(d);
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
    return x;
}

ComplexMatrix displacement(int d, int j, int k) {
    require_dim(d);
    j = ((j % d) + d) % d;
    k = ((k % d) + d) % d;
    // Z^j X^k has a single nonzero per column: (Z^j X^k)|m> = w^{j(m+k)} |m+k>
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    const Complex phase = std::polar(1.0, -std::numbers::pi * j * k / d);
    for (int m = 0; m < d; ++m)
        out((m + k) % d, m) = std::polar(1.0, kTwoPi * j * ((m + k) % d) / d) * phase;
    return out;
}

Eigen::VectorXcd phi_plus_vector(int d) {
    require_dim(d);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    return v;
}

Eigen::VectorXcd bell_vector(int d, int k, int l) {
    require_dim(d);
    // (Z^k (x) X^l)|phi+> = (1/sqrt d) sum_j w^{jk} |j, j+l>
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        v(j * d + (j + l) % d) = std::polar(norm, kTwoPi * j * k / d);
    return v;
}

std::vector<Eigen::VectorXcd> bell_basis(int d) {
    std::vector<Eigen::VectorXcd> out;
    out.reserve(d * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out.push_back(bell_vector(d, k, l));
    return out;
}

BlochCoeffs bloch_coeffs(const FacetState& s) {
    ValidationReport rep = validate(s);
    if (!rep.ok()) throw std::invalid_argument("bloch_coeffs: invalid facet state");
    const int d = s.d;
    // facet = d x_1 |phi+><phi+| + sum_l (d x_{l+1}) rho_l with
    //   phi+:  c_ab = 1/d^2 for all a,b
    //   rho_l: c_a0 = w^{al}/d^2, zero elsewhere
    // so column b != 0 is flat x_1/d and column 0 carries the DFT of x.
    BlochCoeffs bc;
    bc.d = d;
    bc.c = ComplexMatrix::Constant(d, d, Complex(s.x[0] / d, 0.0));
    for (int a = 0; a < d; ++a) {
        Complex acc = 0.0;
        for (int k = 0; k < d; ++k) acc += s.x[k] * std::polar(1.0, kTwoPi * a * k / d);
        bc.c(a, 0) = acc / static_cast<double>(d);
    }
    return bc;
}

ComplexMatrix bloch_reconstruct(const BlochCoeffs& bc) {
    const int d = bc.d;
    ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const ComplexMatrix dab = displacement(d, a, b);
            out += bc.c(a, b) * kron(dab, dab.conjugate());
        }
    return out;
}

double ccnr_via_bloch(const FacetState& s) {
    const BlochCoeffs bc = bloch_coeffs(s);
    return bc.d * bc.c.cwiseAbs().sum();
}

}  // namespace axisym
