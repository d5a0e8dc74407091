#include "axisym/twirl.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace axisym {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

ComplexMatrix generator_matrix(const SymmetryGenerator& g) {
    if (g.d < 2) throw std::invalid_argument("generator_matrix: d must be >= 2");
    const int d = g.d;
    if (g.kind == SymmetryGenerator::Kind::CyclicShift) {
        if (g.shift < 1 || g.shift > d - 1)
            throw std::invalid_argument("generator_matrix: shift must lie in 1..d-1");
        ComplexMatrix u = ComplexMatrix::Zero(d, d);
        for (int j = 0; j < d; ++j) u((j + g.shift) % d, j) = 1.0;
        return kron(u, u);
    }
    if (static_cast<int>(g.phases.size()) != d - 1)
        throw std::invalid_argument("generator_matrix: need d-1 phase parameters");
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    double total = 0.0;
    for (int j = 0; j < d - 1; ++j) {
        u(j, j) = std::polar(1.0, kTwoPi * g.phases[j]);
        total += g.phases[j];
    }
    u(d - 1, d - 1) = std::polar(1.0, -kTwoPi * total);   // unit determinant
    return kron(u, u.conjugate());
}

FamilyState twirl_to_family(const DensityMatrix& sigma) {
    const int d = sigma.d;
    if (d < 2 || sigma.mat.rows() != d * d || sigma.mat.cols() != d * d)
        throw std::invalid_argument("twirl_to_family: malformed density matrix");
    const ComplexMatrix& m = sigma.mat;

    FamilyState s;
    s.d = d;
    s.x.assign(d, 0.0);
    s.y.assign(d - 1, Complex(0.0, 0.0));

    // diagonal orbits: x_{j+1} = (1/d) sum_k sigma_{k k+j, k k+j}
    // (first element as offset keeps constant orbits exact)
    for (int j = 0; j < d; ++j) {
        const double first = m(0 * d + j, 0 * d + j).real();
        double acc = 0.0;
        for (int k = 0; k < d; ++k) {
            const int r = k * d + (k + j) % d;
            acc += m(r, r).real() - first;
        }
        s.x[j] = first + acc / d;
    }

    // |kk><jj| orbits with Hermitization:
    // y_m = (1/2d) sum_k [ sigma_{kk,(k-m)(k-m)} + conj(sigma_{(k-m)(k-m),kk}) ]
    for (int mth = 1; mth < d; ++mth) {
        const int j0 = (0 - mth + d) % d;
        const Complex first =
            0.5 * (m(0, j0 * d + j0) + std::conj(m(j0 * d + j0, 0)));
        Complex acc = 0.0;
        for (int k = 0; k < d; ++k) {
            const int j = (k - mth + d) % d;
            const Complex t =
                0.5 * (m(k * d + k, j * d + j) + std::conj(m(j * d + j, k * d + k)));
            acc += t - first;
        }
        s.y[mth - 1] = first + acc / static_cast<double>(d);
    }
    // pin y_m = conj(y_{d-m}) exactly
    for (int mth = 1; 2 * mth <= d - 1; ++mth) s.y[d - mth - 1] = std::conj(s.y[mth - 1]);
    if (d % 2 == 0) s.y[d / 2 - 1] = Complex(s.y[d / 2 - 1].real(), 0.0);
    return s;
}

double invariance_residual(const DensityMatrix& rho, int samples, std::uint64_t seed) {
    const int d = rho.d;
    double worst = 0.0;
    for (int n = 1; n < d; ++n) {
        const ComplexMatrix g = generator_matrix(SymmetryGenerator::cyclic(d, n));
        worst = std::max(worst, (g * rho.mat * g.adjoint() - rho.mat).cwiseAbs().maxCoeff());
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        std::vector<double> phi(d - 1);
        for (double& p : phi) p = uniform01(rng);
        const ComplexMatrix g = generator_matrix(SymmetryGenerator::phase(d, phi));
        worst = std::max(worst, (g * rho.mat * g.adjoint() - rho.mat).cwiseAbs().maxCoeff());
    }
    return worst;
}

double invariance_residual(const FamilyState& s, int samples, std::uint64_t seed) {
    return invariance_residual(to_density_matrix(s), samples, seed);
}

}  // namespace axisym
