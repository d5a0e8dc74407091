#include "axisym/family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace axisym {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Mean with the first element as offset: exact when all inputs are equal.
double stable_mean(const std::vector<double>& v) {
    double acc = 0.0;
    for (double t : v) acc += t - v[0];
    return v[0] + acc / static_cast<double>(v.size());
}

Complex stable_mean(const std::vector<Complex>& v) {
    Complex acc = 0.0;
    for (const Complex& t : v) acc += t - v[0];
    return v[0] + acc / static_cast<double>(v.size());
}

std::string entry_name(int d, int r, int c) {
    std::ostringstream os;
    os << "(|" << r / d << " " << r % d << ">, |" << c / d << " " << c % d << ">)";
    return os.str();
}

}  // namespace

FamilyState FacetState::to_family() const {
    FamilyState s;
    s.d = d;
    s.x = x;
    if (d >= 2 && !x.empty()) s.y.assign(d - 1, Complex(x[0], 0.0));
    return s;
}

FacetState FacetCoordsD3::to_facet() const {
    return FacetState{3, {z / 3.0, (1.0 - z) * (1.0 + rbar) / 6.0, (1.0 - z) * (1.0 - rbar) / 6.0}};
}

std::vector<double> circulant_eigenvalues(const FamilyState& s) {
    std::vector<double> lam(s.d, 0.0);
    for (int j = 0; j < s.d; ++j) {
        Complex acc = s.x[0];
        for (int k = 1; k < s.d; ++k)
            acc += s.y[k - 1] * std::polar(1.0, kTwoPi * j * k / s.d);
        lam[j] = acc.real();
    }
    return lam;
}

ValidationReport validate(const FamilyState& s) {
    ValidationReport rep;
    if (!s.shape_ok()) {
        rep.violations.push_back("shape: expected d>=2 with d diagonal and d-1 off-diagonal parameters");
        return rep;
    }
    for (int k = 0; k < s.d; ++k)
        if (!(s.x[k] >= -tol::tie)) {
            rep.violations.push_back("x_" + std::to_string(k + 1) + " negative: " + std::to_string(s.x[k]));
            break;
        }
    double norm = 0.0;
    for (double v : s.x) norm += v;
    if (std::abs(s.d * norm - 1.0) > tol::trace)
        rep.violations.push_back("normalization: d*sum(x) = " + std::to_string(s.d * norm));
    for (int m = 1; m < s.d; ++m) {
        if (std::abs(s.y[m - 1] - std::conj(s.y[s.d - m - 1])) > tol::tie) {
            rep.violations.push_back("conjugate symmetry: y_" + std::to_string(m) +
                                     " != conj(y_" + std::to_string(s.d - m) + ")");
            break;
        }
    }
    rep.lambda = circulant_eigenvalues(s);
    for (int j = 0; j < s.d; ++j)
        if (rep.lambda[j] < -tol::psd) {
            rep.violations.push_back("circulant eigenvalue lambda_" + std::to_string(j) +
                                     " negative: " + std::to_string(rep.lambda[j]));
            break;
        }
    return rep;
}

ValidationReport validate(const FacetState& s) { return validate(s.to_family()); }

DensityMatrix to_density_matrix(const FamilyState& s) {
    ValidationReport rep = validate(s);
    if (!rep.ok()) {
        std::string msg = "family state invalid:";
        for (const auto& v : rep.violations) msg += " [" + v + "]";
        throw std::invalid_argument(msg);
    }
    const int d = s.d;
    ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
            m(k * d + j, k * d + j) = s.x[(j - k + d) % d];
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
            if (k != j) m(k * d + k, j * d + j) = s.y[((k - j + d) % d) - 1];
    return DensityMatrix{d, std::move(m)};
}

DensityMatrix to_density_matrix(const FacetState& s) { return to_density_matrix(s.to_family()); }

FamilyState from_density_matrix(const DensityMatrix& rho, double tol) {
    const int d = rho.d;
    const ComplexMatrix& m = rho.mat;

    // collect orbit entries, then verify within-orbit agreement
    std::vector<std::vector<double>> xorb(d);
    std::vector<std::vector<Complex>> yorb(d - 1);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            const Complex v = m(k * d + j, k * d + j);
            if (std::abs(v.imag()) > tol)
                throw NotInFamilyError("diagonal entry not real at " + entry_name(d, k * d + j, k * d + j));
            xorb[(j - k + d) % d].push_back(v.real());
        }
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
            if (k != j) yorb[((k - j + d) % d) - 1].push_back(m(k * d + k, j * d + j));

    // everything outside the two orbit patterns must vanish
    for (int r = 0; r < d * d; ++r)
        for (int c = 0; c < d * d; ++c) {
            if (r == c) continue;
            const bool y_pos = (r / d == r % d) && (c / d == c % d);
            if (y_pos) continue;
            if (std::abs(m(r, c)) > tol)
                throw NotInFamilyError("off-pattern entry " + entry_name(d, r, c) + " has modulus " +
                                       std::to_string(std::abs(m(r, c))));
        }

    FamilyState s;
    s.d = d;
    s.x.resize(d);
    s.y.resize(d - 1);
    for (int o = 0; o < d; ++o) {
        for (double v : xorb[o])
            if (std::abs(v - xorb[o][0]) > tol)
                throw NotInFamilyError("diagonal orbit " + std::to_string(o + 1) + " entries differ by " +
                                       std::to_string(std::abs(v - xorb[o][0])));
        s.x[o] = stable_mean(xorb[o]);
    }
    for (int o = 0; o < d - 1; ++o) {
        for (const Complex& v : yorb[o])
            if (std::abs(v - yorb[o][0]) > tol)
                throw NotInFamilyError("off-diagonal orbit " + std::to_string(o + 1) + " entries differ by " +
                                       std::to_string(std::abs(v - yorb[o][0])));
        s.y[o] = stable_mean(yorb[o]);
    }
    // pin conjugate symmetry exactly (mirror the lower half)
    for (int mth = 1; 2 * mth <= d - 1; ++mth) s.y[d - mth - 1] = std::conj(s.y[mth - 1]);
    if (d % 2 == 0) s.y[d / 2 - 1] = Complex(s.y[d / 2 - 1].real(), 0.0);
    return s;
}

std::vector<FamilyState> vertices(int d) {
    if (d < 2) throw std::invalid_argument("vertices: d must be >= 2");
    std::vector<FamilyState> out;
    out.reserve(2 * d - 1);
    for (int k = 2; k <= d; ++k) {
        FamilyState s;
        s.d = d;
        s.x.assign(d, 0.0);
        s.x[k - 1] = 1.0 / d;
        s.y.assign(d - 1, Complex(0.0, 0.0));
        out.push_back(std::move(s));
    }
    for (int j = 0; j < d; ++j) {
        FamilyState s;
        s.d = d;
        s.x.assign(d, 0.0);
        s.x[0] = 1.0 / d;
        s.y.assign(d - 1, Complex(0.0, 0.0));
        // y_k = w^{-jk}/d; build half and mirror so conjugate symmetry is exact
        for (int k = 1; 2 * k <= d - 1; ++k) {
            s.y[k - 1] = std::polar(1.0 / d, -kTwoPi * j * k / d);
            s.y[d - k - 1] = std::conj(s.y[k - 1]);
        }
        if (d % 2 == 0) {
            const int k = d / 2;
            s.y[k - 1] = Complex((j % 2 == 0 ? 1.0 : -1.0) / d, 0.0);
        }
        out.push_back(std::move(s));
    }
    return out;
}

FamilyState phi_plus_state(int d) {
    FamilyState s;
    s.d = d;
    s.x.assign(d, 0.0);
    s.x[0] = 1.0 / d;
    s.y.assign(d - 1, Complex(1.0 / d, 0.0));
    return s;
}

FamilyState rho_l_state(int d, int l) {
    if (l < 1 || l > d - 1) throw std::invalid_argument("rho_l: l must lie in 1..d-1");
    FamilyState s;
    s.d = d;
    s.x.assign(d, 0.0);
    s.x[l] = 1.0 / d;
    s.y.assign(d - 1, Complex(0.0, 0.0));
    return s;
}

FamilyState rho_sep_state(int d) {
    FamilyState s;
    s.d = d;
    s.x.assign(d, 1.0 / (d * d));
    s.y.assign(d - 1, Complex(1.0 / (d * d), 0.0));
    return s;
}

FamilyState rho_zero_state(int d) {
    FamilyState s;
    s.d = d;
    s.x.assign(d, 0.0);
    s.x[0] = 1.0 / d;
    s.y.assign(d - 1, Complex(-1.0 / (d * (d - 1.0)), 0.0));
    return s;
}

FamilyState rho_one_mix_state(int d) {
    FamilyState s;
    s.d = d;
    s.x.assign(d, 1.0 / (d * (d - 1.0)));
    s.x[0] = 0.0;
    s.y.assign(d - 1, Complex(0.0, 0.0));
    return s;
}

bool is_facet(const FamilyState& s, double facet_tol) {
    for (const Complex& v : s.y)
        if (std::abs(v - Complex(s.x[0], 0.0)) > facet_tol) return false;
    return true;
}

FacetState as_facet(const FamilyState& s, double facet_tol) {
    if (!is_facet(s, facet_tol))
        throw std::invalid_argument("as_facet: off-diagonal orbit values differ from x_1");
    return FacetState{s.d, s.x};
}

}  // namespace axisym
