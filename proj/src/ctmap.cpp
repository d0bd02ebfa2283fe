#include "ctr/ctmap.hpp"

#include <algorithm>
#include <cmath>

namespace ctr {

RatePredicate make_predicate(const PolygonalRateRegion& region, const NumericPolicy& policy) {
    const double eps = policy.eps_member;
    return [region, eps](double r1, double r2) { return region.contains(r1, r2, eps); };
}

RatePredicate make_predicate(const GbcChannel& ch, const NumericPolicy& policy) {
    validate(ch);
    return [ch, policy](double r1, double r2) {
        return gbc_region_contains(ch, {r1, r2}, policy);
    };
}

CompletionTimePair map_side1(const RatePair& r, const LoadSpec& load, double r2_phase2,
                             const NumericPolicy& policy) {
    validate(r);
    validate(load);
    if (r.r1 <= 0.0) throw std::domain_error("map_side1: r1 = 0 gives unbounded d1");
    if (!(r2_phase2 > 0.0) || r.r2 > r2_phase2 + policy.eps_member)
        throw std::domain_error("map_side1: needs 0 <= r2 <= r2_phase2 with r2_phase2 > 0");
    if (r.r2 / r.r1 > load.tau2 / load.tau1 + policy.eps_member)
        throw std::domain_error("map_side1: rate point above the load ray (d1 <= d2 violated)");
    const double d1 = load.tau1 / r.r1;
    const double d2 = load.tau2 / r2_phase2 + (r2_phase2 - r.r2) * load.tau1 / (r2_phase2 * r.r1);
    return {d1, d2};
}

CompletionTimePair map_side2(const RatePair& r, const LoadSpec& load, double r1_phase2,
                             const NumericPolicy& policy) {
    validate(r);
    validate(load);
    if (r.r2 <= 0.0) throw std::domain_error("map_side2: r2 = 0 gives unbounded d2");
    if (!(r1_phase2 > 0.0) || r.r1 > r1_phase2 + policy.eps_member)
        throw std::domain_error("map_side2: needs 0 <= r1 <= r1_phase2 with r1_phase2 > 0");
    if (r.r2 / r.r1 < load.tau2 / load.tau1 - policy.eps_member)
        throw std::domain_error("map_side2: rate point below the load ray (d1 >= d2 violated)");
    const double d1 = load.tau1 / r1_phase2 + (r1_phase2 - r.r1) * load.tau2 / (r1_phase2 * r.r2);
    const double d2 = load.tau2 / r.r2;
    return {d1, d2};
}

double weighted_ct_objective(int side, const RatePair& r, const LoadSpec& load, double w,
                             const SoloCaps& caps, const NumericPolicy& policy) {
    validate(caps);
    if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("weight out of [0,1]");
    if (side != 1 && side != 2) throw std::domain_error("side must be 1 or 2");
    const CompletionTimePair d = side == 1 ? map_side1(r, load, caps.cap2, policy)
                                           : map_side2(r, load, caps.cap1, policy);
    return w * d.d1 + (1.0 - w) * d.d2;
}

bool constrained_membership(const RatePredicate& region_contains, const SoloCaps& caps,
                            const RatePair& rate, double span_ratio) {
    validate(caps);
    validate(rate);
    if (!(span_ratio > 0.0) || !std::isfinite(span_ratio))
        throw std::domain_error("span ratio must be finite and positive");
    if (span_ratio <= 1.0) {
        const double r2 =
            std::max(rate.r2 / span_ratio - (1.0 / span_ratio - 1.0) * caps.cap2, 0.0);
        return region_contains(rate.r1, r2);
    }
    const double r1 = std::max(span_ratio * rate.r1 - (span_ratio - 1.0) * caps.cap1, 0.0);
    return region_contains(r1, rate.r2);
}

bool ct_achievable(const RatePredicate& region_contains, const SoloCaps& caps,
                   const LoadSpec& load, const CompletionTimePair& d) {
    validate(load);
    validate(d);
    const RatePair rate{load.tau1 / d.d1, load.tau2 / d.d2};
    return constrained_membership(region_contains, caps, rate, d.d1 / d.d2);
}

}  // namespace ctr
