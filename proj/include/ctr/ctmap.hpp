// Rate-pair to completion-time-pair mappings, the weighted objectives, and
// the ratio-constrained membership test that defines achievability of a
// completion-time pair.
#ifndef CTR_CTMAP_HPP
#define CTR_CTMAP_HPP

#include <functional>

#include "ctr/channels.hpp"
#include "ctr/core.hpp"

namespace ctr {

// Membership predicate of a standard (c = 1) rate region.
using RatePredicate = std::function<bool(double r1, double r2)>;

RatePredicate make_predicate(const PolygonalRateRegion& region, const NumericPolicy& policy = {});
RatePredicate make_predicate(const GbcChannel& ch, const NumericPolicy& policy = {});

// Two-phase mapping for the d1 <= d2 side. Phase one delivers both users'
// bits at rate r; phase two carries user 2 alone at rate r2_phase2:
//   d1 = tau1/r1,  d2 = tau2/r2_phase2 + (r2_phase2 - r2) tau1 / (r2_phase2 r1).
// Requires r1 > 0, 0 <= r2 <= r2_phase2 and r2/r1 <= tau2/tau1 (+eps).
CompletionTimePair map_side1(const RatePair& r, const LoadSpec& load, double r2_phase2,
                             const NumericPolicy& policy = {});

// Mirror image for the d1 >= d2 side.
CompletionTimePair map_side2(const RatePair& r, const LoadSpec& load, double r1_phase2,
                             const NumericPolicy& policy = {});

// w*d1 + (1-w)*d2 of the side mapping with the phase-two rate set to the
// matching solo cap.
double weighted_ct_objective(int side, const RatePair& r, const LoadSpec& load, double w,
                             const SoloCaps& caps, const NumericPolicy& policy = {});

// Membership of a codeword-span-constrained rate pair with span ratio c:
//   c <= 1:  (R1, [R2/c - (1/c - 1) cap2]^+)  in the standard region,
//   c >= 1:  ([c R1 - (c - 1) cap1]^+, R2)    in the standard region.
bool constrained_membership(const RatePredicate& region_contains, const SoloCaps& caps,
                            const RatePair& rate, double span_ratio);

// Ground-truth membership test for completion-time pairs:
// (tau1/d1, tau2/d2) must lie in the span-constrained region with c = d1/d2.
bool ct_achievable(const RatePredicate& region_contains, const SoloCaps& caps,
                   const LoadSpec& load, const CompletionTimePair& d);

}  // namespace ctr

#endif
