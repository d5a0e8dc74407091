#include "axisym/schmidt.hpp"

#include <cmath>
#include <stdexcept>

#include "axisym/criteria.hpp"
#include "axisym/oracle.hpp"

namespace axisym {

int schmidt_rank(const PureState& p, double rank_tol) {
    if (p.d < 1 || p.coeff.rows() != p.d || p.coeff.cols() != p.d)
        throw std::invalid_argument("schmidt_rank: malformed coefficient matrix");
    if (std::abs(p.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("schmidt_rank: state is not normalized");
    Eigen::JacobiSVD<ComplexMatrix> svd(p.coeff);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > rank_tol) ++rank;
    return rank;
}

int witness_lower_bound_from_fidelity(int d, double fidelity, double tie_tol) {
    int best = 1;
    for (int K = 2; K <= d; ++K)
        if (static_cast<double>(K - 1) / d - fidelity < -tie_tol) best = K;
    return best;
}

int witness_lower_bound(const FacetState& s, double tie_tol) {
    ValidationReport rep = validate(s);
    if (!rep.ok()) throw std::invalid_argument("witness_lower_bound: invalid facet state");
    return witness_lower_bound_from_fidelity(s.d, s.d * s.x[0], tie_tol);
}

PureState circulant_pure_state(const FacetState& s, const std::vector<int>& signs) {
    ValidationReport rep = validate(s);
    if (!rep.ok()) throw std::invalid_argument("circulant_pure_state: invalid facet state");
    if (static_cast<int>(signs.size()) != s.d - 1)
        throw std::invalid_argument("circulant_pure_state: need d-1 signs");
    for (int v : signs)
        if (v != 1 && v != -1) throw std::invalid_argument("circulant_pure_state: signs must be +-1");
    const int d = s.d;
    PureState p;
    p.d = d;
    p.coeff = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        p.coeff(j, j) = std::sqrt(s.x[0]);
        for (int k = 1; k < d; ++k)
            p.coeff(j, (j + k) % d) = signs[k - 1] * std::sqrt(s.x[k]);
    }
    return p;
}

double surface_x1(int d, const std::vector<double>& x_tail) {
    if (d < 2) throw std::invalid_argument("surface_x1: d must be >= 2");
    if (static_cast<int>(x_tail.size()) != d - 2)
        throw std::invalid_argument("surface_x1: tail must hold x_3..x_d");
    double T = 0.0, S = 0.0;
    for (double v : x_tail) {
        if (v < 0.0) throw std::invalid_argument("surface_x1: tail entries must be nonnegative");
        T += v;
        S += std::sqrt(v);
    }
    // sqrt(x_1) - S = sqrt(x_2) has a root iff S^2 + T <= 1/d
    const double disc = 2.0 / d - 2.0 * T - S * S;
    if (S * S + T > 1.0 / d + 1e-13)
        throw std::invalid_argument("surface_x1: infeasible tail, sqrt-sum exceeds the remaining mass");
    return 0.5 * ((1.0 / d - T) + S * std::sqrt(std::max(disc, 0.0)));
}

SchmidtHull::SchmidtHull(int d, int samples_per_dim) : d_(d) {
    if (d < 2) throw std::invalid_argument("SchmidtHull: d must be >= 2");
    if (samples_per_dim < 2) throw std::invalid_argument("SchmidtHull: need at least 2 samples per dim");

    // diagonal vertices rho_l and the flat separable corner
    for (int l = 1; l <= d - 1; ++l) {
        std::vector<double> x(d, 0.0);
        x[l] = 1.0 / d;
        gens_.push_back(std::move(x));
    }
    gens_.push_back(std::vector<double>(d, 1.0 / (d * d)));

    // discretized surface states; each tail coordinate is capped by 1/(2d)
    const int tail_dims = d - 2;
    const double cap = 1.0 / (2.0 * d);
    std::vector<int> idx(tail_dims, 0);
    while (true) {
        std::vector<double> tail(tail_dims);
        for (int t = 0; t < tail_dims; ++t)
            tail[t] = cap * idx[t] / (samples_per_dim - 1);
        double T = 0.0, S = 0.0;
        for (double v : tail) {
            T += v;
            S += std::sqrt(v);
        }
        if (S * S + T <= 1.0 / d + 1e-13) {
            const double x1 = surface_x1(d, tail);
            std::vector<double> x(d);
            x[0] = x1;
            x[1] = 1.0 / d - x1 - T;
            for (int t = 0; t < tail_dims; ++t) x[2 + t] = tail[t];
            gens_.push_back(std::move(x));
        }
        if (tail_dims == 0) break;
        int pos = 0;
        while (pos < tail_dims && ++idx[pos] == samples_per_dim) idx[pos++] = 0;
        if (pos == tail_dims) break;
    }
}

bool SchmidtHull::contains(const FacetState& s, double lp_tol) const {
    if (s.d != d_) throw std::invalid_argument("SchmidtHull: dimension mismatch");
    return hull_membership(s.x, gens_, lp_tol);
}

SchmidtBounds schmidt_bounds(const FacetState& s, const SchmidtHull& hull) {
    SchmidtBounds b;
    b.lower = witness_lower_bound(s);
    b.lower_source = "fidelity witness";
    const ClassificationReport rep = classify_facet(s);
    if (rep.verdict == Verdict::Separable) {
        b.upper = 1;
        b.upper_source = "separability polytope";
    } else if (hull.contains(s)) {
        b.upper = s.d - 1;
        b.upper_source = "hull of twirled circulant states";
    } else {
        b.upper = s.d;
        b.upper_source = "trivial";
    }
    return b;
}

SchmidtBounds schmidt_bounds(const FacetState& s, int samples_per_dim) {
    return schmidt_bounds(s, SchmidtHull(s.d, samples_per_dim));
}

}  // namespace axisym
