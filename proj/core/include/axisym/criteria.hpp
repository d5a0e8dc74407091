#pragma once

#include <string>
#include <vector>

#include "axisym/family.hpp"

namespace axisym {

enum class Verdict {
    Separable,
    BoundEntangled,
    NptEntangled,
    EntangledUnknownPpt,
    Unknown,
};

std::string to_string(Verdict v);

struct ClassificationReport {
    Verdict verdict = Verdict::Unknown;
    bool ppt = false;
    double ccnr_value = 0.0;
    std::vector<double> ppt_margins;    // sqrt(x_{i+1} x_{d+1-i}) - |y_i|, i = 1..d-1
    std::vector<std::string> notes;

    double min_ppt_margin() const;
};

struct PptResult {
    bool ppt = false;
    std::vector<double> margins;
};

/// Positivity of the partial transpose, decided entirely from the orbit
/// parameters: PPT iff sqrt(x_{i+1} x_{d+1-i}) >= |y_i| for all i.
/// Margins within +-tie_tol count as satisfied.
PptResult ppt_analytic(const FamilyState& s, double tie_tol = tol::tie);

/// Realignment trace norm from the orbit parameters:
/// d * sum_j |y_j| + sum_j |DFT_j(x)|. Values above 1 certify entanglement.
double ccnr_analytic(const FamilyState& s);
double ccnr_analytic(const FacetState& s);

/// Complete classification inside the facet: separable iff x_1 <= x_k for
/// all k >= 2; entangled states split into PPT (bound) and NPT.
ClassificationReport classify_facet(const FacetState& s, double tie_tol = tol::tie);

/// Classification for a general family member. Separability is only ever
/// claimed through the facet; PPT states that escape both the facet and the
/// CCNR threshold come back as Unknown.
ClassificationReport classify_general(const FamilyState& s, double tie_tol = tol::tie);

/// One-parameter slice of facet states that stays PPT for small beta while
/// the realignment value exceeds 1: x_k = x1 except x_l = x1 - beta and
/// x_{d+2-l} = 1/d - (d-1) x1 + beta.
struct BandState {
    int d = 0;
    double x1 = 0.0;
    int l = 2;          // 2..floor(d/2)
    double beta = 0.0;  // [0, x1]

    FacetState facet() const;
};

/// Largest beta keeping the band state PPT (root of the PPT boundary
/// quadratic). Requires x1 <= 1/d^2.
double beta_plus(int d, double x1);

/// CCNR margin ccnr - 1 of the band state; positive for every beta in (0, x1].
double band_entanglement_margin(const BandState& b);
bool band_is_entangled(const BandState& b);

}  // namespace axisym
