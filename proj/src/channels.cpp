#include "ctr/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ctr {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

[[noreturn]] void wrong_regime(const char* op, Regime got) {
    throw std::domain_error(std::string(op) + ": wrong interference regime (" +
                            to_string(got) + ")");
}

}  // namespace

const char* to_string(Regime r) {
    switch (r) {
        case Regime::VeryStrong: return "very-strong";
        case Regime::Strong: return "strong";
        case Regime::Weak: return "weak";
        case Regime::Mixed: return "mixed";
    }
    return "?";
}

void validate(const GbcChannel& ch) {
    require(std::isfinite(ch.h1) && std::isfinite(ch.h2) && std::isfinite(ch.P),
            "gbc channel parameters must be finite");
    require(ch.h2 > 0.0, "gbc channel requires h2 > 0");
    require(ch.h1 >= ch.h2, "gbc channel requires h1 >= h2 (relabel users explicitly)");
    require(ch.P > 0.0, "gbc channel requires P > 0");
}

void validate(const GicChannel& ch) {
    require(std::isfinite(ch.a) && std::isfinite(ch.b) && std::isfinite(ch.P1) &&
                std::isfinite(ch.P2),
            "gic channel parameters must be finite");
    require(ch.a >= 0.0 && ch.b >= 0.0, "gic cross gains must be non-negative");
    require(ch.P1 > 0.0 && ch.P2 > 0.0, "gic powers must be strictly positive");
}

Regime classify(const GicChannel& ch) {
    validate(ch);
    const double sa = std::sqrt(1.0 + ch.P2);  // threshold on a
    const double sb = std::sqrt(1.0 + ch.P1);  // threshold on b
    if (ch.a >= sa && ch.b >= sb) return Regime::VeryStrong;
    if (ch.a >= 1.0 && ch.a < sa && ch.b >= 1.0 && ch.b < sb) return Regime::Strong;
    if (ch.a < 1.0 && ch.b < 1.0) return Regime::Weak;
    return Regime::Mixed;
}

SoloCaps solo_caps(const GbcChannel& ch) {
    validate(ch);
    return {snr_to_rate(ch.h1 * ch.h1 * ch.P), snr_to_rate(ch.h2 * ch.h2 * ch.P)};
}

SoloCaps solo_caps(const GicChannel& ch) {
    validate(ch);
    return {snr_to_rate(ch.P1), snr_to_rate(ch.P2)};
}

RatePair gbc_boundary_point(const GbcChannel& ch, double power1) {
    validate(ch);
    if (!(power1 >= 0.0 && power1 <= ch.P))
        throw std::domain_error("gbc_boundary_point: power split outside [0, P]");
    const double h1s = ch.h1 * ch.h1;
    const double h2s = ch.h2 * ch.h2;
    return {snr_to_rate(h1s * power1),
            snr_to_rate(h2s * ch.P) - snr_to_rate(h2s * power1)};
}

bool gbc_region_contains(const GbcChannel& ch, const RatePair& r, const NumericPolicy& policy) {
    validate(ch);
    if (!(std::isfinite(r.r1) && std::isfinite(r.r2))) return false;
    if (r.r1 < -policy.eps_member || r.r2 < -policy.eps_member) return false;
    const double h1s = ch.h1 * ch.h1;
    const double h2s = ch.h2 * ch.h2;
    const double cap1 = snr_to_rate(h1s * ch.P);
    if (r.r1 > cap1 + policy.eps_member) return false;
    // smallest power share that supports r1, clamped into [0, P]
    const double p1min = std::min(ch.P, rate_to_snr(std::max(r.r1, 0.0)) / h1s);
    const double r2max = snr_to_rate(h2s * ch.P) - snr_to_rate(h2s * p1min);
    return r.r2 <= r2max + policy.eps_member;
}

PolygonalRateRegion PolygonalRateRegion::validated(std::vector<RatePair> points,
                                                   const NumericPolicy& policy) {
    const double eps = policy.eps_member;
    const std::size_t J = points.size();
    require(J >= 2, "polygon needs at least two points");
    for (std::size_t i = 0; i < J; ++i) {
        validate(points[i]);
    }
    for (std::size_t i = 0; i + 1 < J; ++i) {
        const RatePair& p = points[i];
        const RatePair& q = points[i + 1];
        require(std::max(std::abs(q.r1 - p.r1), std::abs(q.r2 - p.r2)) > eps,
                "duplicate point A_" + std::to_string(i + 2));
        require(q.r1 >= p.r1 - eps && q.r2 <= p.r2 + eps,
                "non-convex ordering at A_" + std::to_string(i + 2));
    }
    // Clockwise turns only; collinear middles would collapse two segments
    // onto one line and break the coefficient chain.
    for (std::size_t i = 0; i + 2 < J; ++i) {
        const double e1x = points[i + 1].r1 - points[i].r1;
        const double e1y = points[i + 1].r2 - points[i].r2;
        const double e2x = points[i + 2].r1 - points[i + 1].r1;
        const double e2y = points[i + 2].r2 - points[i + 1].r2;
        const double cross = e1x * e2y - e1y * e2x;
        const double scale = std::hypot(e1x, e1y) * std::hypot(e2x, e2y);
        require(cross < -1e-9 * scale,
                cross > 1e-9 * scale
                    ? "non-convex at A_" + std::to_string(i + 2)
                    : "collinear (redundant) point A_" + std::to_string(i + 2));
    }

    PolygonalRateRegion region;
    region.segments_.reserve(J - 1);
    for (std::size_t i = 0; i + 1 < J; ++i) {
        const RatePair& p = points[i];
        const RatePair& q = points[i + 1];
        const double det = p.r1 * q.r2 - p.r2 * q.r1;
        require(std::abs(det) > 1e-14 * (1.0 + std::abs(p.r1 * q.r2)),
                "segment " + std::to_string(i + 1) + " lies on a line through the origin");
        PolygonSegment s{(q.r2 - p.r2) / det, (p.r1 - q.r1) / det};
        require(s.a >= -eps && s.b >= -eps,
                "segment " + std::to_string(i + 1) + " has negative normalized coefficients");
        region.segments_.push_back(s);
    }
    require(std::abs(region.segments_.front().a) <= eps, "first segment not horizontal");
    require(std::abs(region.segments_.back().b) <= eps, "last segment not vertical");
    for (std::size_t j = 0; j + 1 < region.segments_.size(); ++j) {
        require(region.segments_[j + 1].a > region.segments_[j].a - eps &&
                    region.segments_[j + 1].b < region.segments_[j].b + eps,
                "coefficient monotonicity violated at segment " + std::to_string(j + 2));
    }
    region.points_ = std::move(points);
    return region;
}

bool PolygonalRateRegion::contains(double r1, double r2, double eps) const {
    if (!(std::isfinite(r1) && std::isfinite(r2))) return false;
    if (r1 < -eps || r2 < -eps) return false;
    for (const PolygonSegment& s : segments_) {
        if (s.a * r1 + s.b * r2 > 1.0 + eps) return false;
    }
    return true;
}

double strong_sum_rate(const GicChannel& ch) {
    return std::min(snr_to_rate(ch.P1 + ch.b * ch.b * ch.P2),
                    snr_to_rate(ch.a * ch.a * ch.P1 + ch.P2));
}

PolygonalRateRegion strong_ic_polygon(const GicChannel& ch, const NumericPolicy& policy) {
    const Regime regime = classify(ch);
    if (regime != Regime::Strong) wrong_regime("strong_ic_polygon", regime);
    const double g1 = snr_to_rate(ch.P1);
    const double g2 = snr_to_rate(ch.P2);
    const double rs = strong_sum_rate(ch);
    // In the strong regime the sum constraint is always active and leaves
    // positive room on both individual faces.
    if (!(rs > std::max(g1, g2) && rs < g1 + g2))
        throw std::logic_error("strong_ic_polygon: degenerate sum-rate face");
    return PolygonalRateRegion::validated(
        {{0.0, g2}, {rs - g2, g2}, {g1, rs - g1}, {g1, 0.0}}, policy);
}

PolygonalRateRegion very_strong_rectangle(const GicChannel& ch, const NumericPolicy& policy) {
    const Regime regime = classify(ch);
    if (regime != Regime::VeryStrong) wrong_regime("very_strong_rectangle", regime);
    const double g1 = snr_to_rate(ch.P1);
    const double g2 = snr_to_rate(ch.P2);
    return PolygonalRateRegion::validated({{0.0, g2}, {g1, g2}, {g1, 0.0}}, policy);
}

namespace {

// One dominant-face constraint coefA*r1 + coefB*r2 <= rhs.
struct FaceBound {
    double coefA;
    double coefB;
    double rhs;
};

// Extreme points of {r >= 0} cut by a vertical cap r1 <= cap1 and sloped
// bounds with coefB > 0, ordered from the r2-axis to the r1-axis. Candidate
// abscissae are the pairwise line intersections; non-extreme candidates are
// discarded by collinearity pruning.
std::vector<RatePair> face_chain(double cap1, const std::vector<FaceBound>& sloped,
                                 const NumericPolicy& policy) {
    // envelope value min_k (rhs - coefA*x)/coefB at abscissa x
    auto env = [&](double x) {
        double best = std::numeric_limits<double>::infinity();
        for (const FaceBound& f : sloped)
            best = std::min(best, (f.rhs - f.coefA * x) / f.coefB);
        return best;
    };
    if (env(cap1) < -policy.eps_member)
        throw std::invalid_argument("etw_polygon: dominant face meets the r1-axis before the cap");

    std::vector<double> xs{0.0, cap1};
    for (std::size_t i = 0; i < sloped.size(); ++i) {
        for (std::size_t k = i + 1; k < sloped.size(); ++k) {
            const double den = sloped[k].coefA * sloped[i].coefB -
                               sloped[i].coefA * sloped[k].coefB;
            if (den == 0.0) continue;
            const double x =
                (sloped[k].rhs * sloped[i].coefB - sloped[i].rhs * sloped[k].coefB) / den;
            if (x > 0.0 && x < cap1) xs.push_back(x);
        }
    }
    std::sort(xs.begin(), xs.end());

    std::vector<RatePair> chain;
    for (double x : xs) {
        if (!chain.empty() && x <= chain.back().r1 + policy.eps_member) continue;
        chain.push_back({x, env(x)});
    }
    if (std::abs(chain.back().r2) <= policy.eps_member) chain.pop_back();
    chain.push_back({cap1, 0.0});

    // keep extreme points only
    std::vector<RatePair> pruned;
    for (const RatePair& p : chain) {
        while (pruned.size() >= 2) {
            const RatePair& u = pruned[pruned.size() - 2];
            const RatePair& v = pruned.back();
            const double cross = (v.r1 - u.r1) * (p.r2 - u.r2) - (v.r2 - u.r2) * (p.r1 - u.r1);
            const double scale = std::hypot(v.r1 - u.r1, v.r2 - u.r2) *
                                 std::hypot(p.r1 - u.r1, p.r2 - u.r2);
            if (std::abs(cross) <= 1e-9 * scale)
                pruned.pop_back();  // v is collinear between u and p
            else
                break;
        }
        pruned.push_back(p);
    }
    return pruned;
}

struct EtwBounds {
    double d1;  // r1 cap
    double d2;  // r2 cap
    double s;   // r1 + r2
    double t1;  // 2 r1 + r2 (infinity when absent)
    double t2;  // r1 + 2 r2 (infinity when absent)
};

// Han-Kobayashi compact-form bounds for a fixed private/common power split.
// p1_private/p2_private are the private shares; the rest of each power is the
// common part decoded by both receivers.
EtwBounds hk_bounds(const GicChannel& ch, double p1_private, double p2_private) {
    const double as = ch.a * ch.a;
    const double bs = ch.b * ch.b;
    const double p1c = ch.P1 - p1_private;
    const double p2c = ch.P2 - p2_private;
    const double n1 = 1.0 + bs * p2_private;  // noise + private interference at rx1
    const double n2 = 1.0 + as * p1_private;
    const double r1_alone = snr_to_rate(ch.P1 / n1);
    const double r2_alone = snr_to_rate(ch.P2 / n2);
    const double rx1_full = snr_to_rate((ch.P1 + bs * p2c) / n1);   // both common + own
    const double rx2_full = snr_to_rate((ch.P2 + as * p1c) / n2);
    const double rx1_priv = snr_to_rate(p1_private / n1);
    const double rx2_priv = snr_to_rate(p2_private / n2);
    const double rx1_mix = snr_to_rate((p1_private + bs * p2c) / n1);  // own private + other common
    const double rx2_mix = snr_to_rate((p2_private + as * p1c) / n2);
    EtwBounds b{};
    b.d1 = r1_alone;
    b.d2 = r2_alone;
    b.s = std::min({rx1_full + rx2_priv, rx2_full + rx1_priv, rx1_mix + rx2_mix});
    b.t1 = rx1_full + rx1_priv + rx2_mix;
    b.t2 = rx2_full + rx2_priv + rx1_mix;
    return b;
}

EtwBounds etw_achievable_bounds(const GicChannel& ch, Regime regime) {
    // Private power chosen so that the private signal arrives at (or below)
    // the noise floor of the unintended receiver; in the mixed regime the
    // strongly-received user sends common only.
    auto capped_private = [](double power, double cross_gain) {
        if (cross_gain <= 0.0) return power;
        return std::min(power, 1.0 / (cross_gain * cross_gain));
    };
    double p1p = capped_private(ch.P1, ch.a);
    double p2p = capped_private(ch.P2, ch.b);
    if (regime == Regime::Mixed) {
        if (ch.a >= 1.0) p1p = 0.0;
        if (ch.b >= 1.0) p2p = 0.0;
    }
    return hk_bounds(ch, p1p, p2p);
}

EtwBounds etw_outer_bounds(const GicChannel& ch, Regime regime) {
    const double snr1 = ch.P1;
    const double snr2 = ch.P2;
    const double inr1 = ch.b * ch.b * ch.P2;
    const double inr2 = ch.a * ch.a * ch.P1;
    const double inf = std::numeric_limits<double>::infinity();
    EtwBounds b{};
    b.d1 = snr_to_rate(snr1);
    b.d2 = snr_to_rate(snr2);
    if (regime == Regime::Weak) {
        const double z1 = snr_to_rate(snr1 + inr1) + snr_to_rate(snr2 / (1.0 + inr1));
        const double z2 = snr_to_rate(snr2 + inr2) + snr_to_rate(snr1 / (1.0 + inr2));
        const double z3 = snr_to_rate(inr1 + snr1 / (1.0 + inr2)) +
                          snr_to_rate(inr2 + snr2 / (1.0 + inr1));
        b.s = std::min({z1, z2, z3});
        b.t1 = snr_to_rate(snr1 + inr1) + snr_to_rate(snr1 / (1.0 + inr2)) +
               snr_to_rate(inr2 + snr2 / (1.0 + inr1));
        b.t2 = snr_to_rate(snr2 + inr2) + snr_to_rate(snr2 / (1.0 + inr1)) +
               snr_to_rate(inr1 + snr1 / (1.0 + inr2));
        return b;
    }
    // Mixed: the strongly-interfered receiver can decode both messages, which
    // caps the sum rate; the weak direction admits the usual genie bound.
    b.t1 = inf;
    b.t2 = inf;
    if (ch.a >= 1.0) {
        b.s = std::min(snr_to_rate(snr2 + inr2),
                       snr_to_rate(snr1 + inr1) + snr_to_rate(snr2 / (1.0 + inr1)));
    } else {
        b.s = std::min(snr_to_rate(snr1 + inr1),
                       snr_to_rate(snr2 + inr2) + snr_to_rate(snr1 / (1.0 + inr2)));
    }
    return b;
}

}  // namespace

PolygonalRateRegion etw_polygon(const GicChannel& ch, EtwKind kind, const NumericPolicy& policy) {
    const Regime regime = classify(ch);
    if (regime != Regime::Weak && regime != Regime::Mixed) wrong_regime("etw_polygon", regime);
    const EtwBounds b =
        kind == EtwKind::Achievable ? etw_achievable_bounds(ch, regime) : etw_outer_bounds(ch, regime);

    std::vector<FaceBound> sloped;
    sloped.push_back({0.0, 1.0, b.d2});
    sloped.push_back({1.0, 1.0, b.s});
    if (std::isfinite(b.t2)) sloped.push_back({1.0, 2.0, b.t2});
    if (std::isfinite(b.t1)) sloped.push_back({2.0, 1.0, b.t1});

    std::vector<RatePair> chain = face_chain(b.d1, std::move(sloped), policy);
    PolygonalRateRegion region = PolygonalRateRegion::validated(std::move(chain), policy);
    if (region.vertex_count() > 6)
        throw std::logic_error("etw_polygon: more than six extreme points survived pruning");
    return region;
}

LoadRayHit intersect_load_ray(const PolygonalRateRegion& region, const LoadSpec& load) {
    validate(load);
    // The ray r = t*(tau1, tau2) exits through the constraint reached at the
    // smallest t; scanning ascending keeps the smaller index on vertex ties.
    double best = 0.0;
    std::size_t best_j = 0;
    for (std::size_t j = 1; j <= region.segment_count(); ++j) {
        const PolygonSegment& s = region.segment(j);
        const double v = s.a * load.tau1 + s.b * load.tau2;
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    if (best <= 0.0) throw std::logic_error("intersect_load_ray: unbounded region");
    const double t = 1.0 / best;
    return {{t * load.tau1, t * load.tau2}, best_j};
}

GbcLoadRayHit intersect_load_ray(const GbcChannel& ch, const LoadSpec& load,
                                 const NumericPolicy& policy) {
    validate(ch);
    validate(load);
    const double h1s = ch.h1 * ch.h1;
    const double h2s = ch.h2 * ch.h2;
    const double r2_full = snr_to_rate(h2s * ch.P);
    auto f = [&](double p1) {
        return snr_to_rate(h1s * p1) * load.tau2 -
               (r2_full - snr_to_rate(h2s * p1)) * load.tau1;
    };
    const double p1 = bisect_increasing(f, 0.0, ch.P, 0.0, policy.eps_root);
    return {gbc_boundary_point(ch, p1), p1};
}

}  // namespace ctr
