#include "axisym/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace axisym {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_valid(const FamilyState& s, const char* who) {
    ValidationReport rep = validate(s);
    if (!rep.ok()) throw std::invalid_argument(std::string(who) + ": invalid state: " + rep.violations.front());
}
}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Separable: return "SEPARABLE";
        case Verdict::BoundEntangled: return "BOUND_ENTANGLED";
        case Verdict::NptEntangled: return "NPT_ENTANGLED";
        case Verdict::EntangledUnknownPpt: return "ENTANGLED_UNKNOWN_PPT";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

double ClassificationReport::min_ppt_margin() const {
    return ppt_margins.empty() ? 0.0 : *std::min_element(ppt_margins.begin(), ppt_margins.end());
}

PptResult ppt_analytic(const FamilyState& s, double tie_tol) {
    require_valid(s, "ppt_analytic");
    PptResult r;
    r.margins.resize(s.d - 1);
    r.ppt = true;
    for (int i = 1; i < s.d; ++i) {
        r.margins[i - 1] = std::sqrt(s.x[i] * s.x[s.d - i]) - std::abs(s.y[i - 1]);
        if (r.margins[i - 1] < -tie_tol) r.ppt = false;
    }
    return r;
}

double ccnr_analytic(const FamilyState& s) {
    require_valid(s, "ccnr_analytic");
    double acc = 0.0;
    for (const Complex& v : s.y) acc += std::abs(v);
    acc *= s.d;
    for (int j = 0; j < s.d; ++j) {
        Complex dft = 0.0;
        for (int k = 0; k < s.d; ++k) dft += s.x[k] * std::polar(1.0, kTwoPi * k * j / s.d);
        acc += std::abs(dft);
    }
    return acc;
}

double ccnr_analytic(const FacetState& s) { return ccnr_analytic(s.to_family()); }

ClassificationReport classify_facet(const FacetState& s, double tie_tol) {
    const FamilyState fam = s.to_family();
    require_valid(fam, "classify_facet");
    ClassificationReport rep;
    const PptResult ppt = ppt_analytic(fam, tie_tol);
    rep.ppt = ppt.ppt;
    rep.ppt_margins = ppt.margins;
    rep.ccnr_value = ccnr_analytic(fam);

    double min_gap = s.x[1] - s.x[0];
    for (int k = 2; k < s.d; ++k) min_gap = std::min(min_gap, s.x[k] - s.x[0]);
    if (min_gap >= -tie_tol) {
        rep.verdict = Verdict::Separable;
        if (min_gap < tie_tol)
            rep.notes.push_back("on the separability boundary x_1 = min x_k, resolved as separable");
    } else {
        rep.verdict = rep.ppt ? Verdict::BoundEntangled : Verdict::NptEntangled;
        if (rep.ppt && rep.min_ppt_margin() < tie_tol)
            rep.notes.push_back("on the PPT boundary, resolved as PPT");
    }
    return rep;
}

ClassificationReport classify_general(const FamilyState& s, double tie_tol) {
    require_valid(s, "classify_general");
    if (is_facet(s, tie_tol)) {
        ClassificationReport rep = classify_facet(FacetState{s.d, s.x}, tie_tol);
        rep.notes.push_back("facet member, classified by the facet polytope");
        return rep;
    }
    ClassificationReport rep;
    const PptResult ppt = ppt_analytic(s, tie_tol);
    rep.ppt = ppt.ppt;
    rep.ppt_margins = ppt.margins;
    rep.ccnr_value = ccnr_analytic(s);
    if (!rep.ppt) {
        rep.verdict = Verdict::NptEntangled;
    } else if (rep.ccnr_value > 1.0 + tie_tol) {
        rep.verdict = Verdict::BoundEntangled;
        rep.notes.push_back("PPT with realignment value above 1");
    } else {
        // separability is only decided inside the facet
        rep.verdict = Verdict::Unknown;
    }
    return rep;
}

FacetState BandState::facet() const {
    FacetState s;
    s.d = d;
    s.x.assign(d, x1);
    s.x[l - 1] = x1 - beta;
    s.x[(d + 2 - l) - 1] = 1.0 / d - (d - 1) * x1 + beta;
    return s;
}

double beta_plus(int d, double x1) {
    if (d < 4) throw std::invalid_argument("beta_plus: band states need d >= 4");
    const double c = 1.0 / d - d * x1;
    if (c < 0.0) throw std::invalid_argument("beta_plus: requires x1 <= 1/d^2");
    return -c / 2.0 + std::sqrt(c * c / 4.0 + c * x1);
}

double band_entanglement_margin(const BandState& b) {
    if (b.l < 2 || b.l > b.d / 2) throw std::invalid_argument("band: l must lie in 2..floor(d/2)");
    if (b.beta < 0.0 || b.beta > b.x1) throw std::invalid_argument("band: beta must lie in [0, x1]");
    return ccnr_analytic(b.facet()) - 1.0;
}

bool band_is_entangled(const BandState& b) { return band_entanglement_margin(b) > 0.0; }

}  // namespace axisym
