// Tangent-line weights, the GBC weighted-sum completion-time solver, the
// polygon partition solver, and the non-convexity certificate.
#ifndef CTR_OPTIMIZE_HPP
#define CTR_OPTIMIZE_HPP

#include <cstddef>
#include <vector>

#include "ctr/channels.hpp"
#include "ctr/core.hpp"

namespace ctr {

// Supporting line a*r1 + b*r2 = 1 of the GBC capacity region at the boundary
// point generated by the power split power1; g = a/b is the slope magnitude.
// w1/w2 are the weighted-sum weights for which that point is the side-1/side-2
// minimizer.
struct TangentLine {
    double a{0.0};
    double b{0.0};
    double g{0.0};
    double power1{0.0};
    double w1{0.0};  // 1 - b * cap2, in [0, 1)
    double w2{0.0};  // a * cap1, in (0, 1]
};

TangentLine gbc_tangent(const GbcChannel& ch, double power1);

// Weight interval in which a minimizer stays active. Closed-right except for
// the full-interval degenerate cases; interior tangent minimizers carry the
// single weight lo == hi.
struct WeightInterval {
    double lo{0.0};
    double hi{0.0};
};

struct SolverResult {
    RatePair minimizer_rate;
    CompletionTimePair minimizer_ct;
    double objective{0.0};
    int side{0};
    WeightInterval weight_interval;
};

struct GbcMinResult {
    SolverResult best;
    SolverResult side1;
    SolverResult side2;
};

// Minimizes w*d1 + (1-w)*d2 over each convex completion-time sub-region by
// locating the boundary rate point whose tangent weight matches w (bisection
// on the power split), then takes the smaller side. Ties go to side 1.
GbcMinResult gbc_min_weighted(const GbcChannel& ch, const LoadSpec& load, double w,
                              const NumericPolicy& policy = {});

// Interval partitions of [0,1] steering the per-weight polygon minimizer.
// Breakpoint lists hold interval upper endpoints; interval j of pi1 selects
// vertex A_{j + k1 - 1} (or C when j == j* + 1 - k1), interval j of pi2
// selects A_{j+1} (or C when j == j*).
struct PartitionSet {
    std::size_t j_star{0};
    std::size_t k1_star{0};
    std::size_t k2_star{0};
    std::vector<double> pi1;  // upper endpoints, last = 1
    std::vector<double> pi2;  // upper endpoints, last = 1
    RatePair ray_point;       // C
};

PartitionSet polygon_partitions(const PolygonalRateRegion& region, const SoloCaps& caps,
                                const LoadSpec& load);

SolverResult polygon_min_weighted(const PolygonalRateRegion& region, const SoloCaps& caps,
                                  const LoadSpec& load, double w, int side,
                                  const NumericPolicy& policy = {});

// Tangent evaluated at the load-ray point C; the region of completion-time
// pairs is non-convex exactly when w1(C) < w2(C).
struct NonconvexityCertificate {
    double w1_at_c{0.0};
    double w2_at_c{0.0};
    double s1{0.0};           // slope w1C/(w1C - 1)
    double s2{0.0};           // slope w2C/(w2C - 1); -inf when w2C == 1
    bool s2_unbounded{false};
    bool nonconvex{false};
};

NonconvexityCertificate nonconvexity_certificate(const GbcChannel& ch, const LoadSpec& load,
                                                 const NumericPolicy& policy = {});

}  // namespace ctr

#endif
