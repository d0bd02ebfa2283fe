// Independent brute-force verification: grid images of rate regions under the
// completion-time mappings, grid minimization of weighted sums, and
// region-agreement reports.
#ifndef CTR_ORACLE_HPP
#define CTR_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ctr/ctmap.hpp"
#include "ctr/regions.hpp"

namespace ctr {

using CtPredicate = std::function<bool(const CompletionTimePair&)>;

// Samples an n x n rate grid over [0, cap1] x [0, cap2], keeps region members
// and maps each through the side mapping picked by the load ray, with the
// phase-two rate set to the solo cap.
std::vector<CompletionTimePair> grid_ct_cloud(const RatePredicate& region_contains,
                                              const SoloCaps& caps, const LoadSpec& load,
                                              std::size_t n);

struct GridMin {
    double objective{0.0};
    CompletionTimePair argmin;
};

GridMin grid_min_weighted(const std::vector<CompletionTimePair>& cloud, double w);
GridMin grid_min_weighted(const RatePredicate& region_contains, const SoloCaps& caps,
                          const LoadSpec& load, double w, std::size_t n);

struct CtBox {
    double d1_lo{0.0}, d1_hi{0.0};
    double d2_lo{0.0}, d2_hi{0.0};
};

// Grid box spanning [0.5 * min vertex, 4 * max vertex] per axis.
CtBox default_box(const std::vector<CompletionTimePair>& vertices);

struct CompareReport {
    std::size_t n{0};
    CtBox box;
    std::size_t both{0};
    std::size_t neither{0};
    std::size_t analytic_only{0};   // analytic accepts, oracle rejects
    std::size_t oracle_only{0};     // oracle accepts, analytic rejects
    std::size_t boundary_band{0};   // disagreements within 3 grid steps of the boundary
    double worst_analytic_only{0.0};  // certified depth of the worst failure
    double worst_oracle_only{0.0};
    bool pass{false};
};

// Classifies an n x n completion-time grid against the ground-truth membership
// test. Disagreements inside a band of three grid steps around the oracle
// boundary are reported but do not fail.
CompareReport compare_regions(const CtPredicate& analytic_contains, const CtBox& box,
                              const RatePredicate& region_contains, const SoloCaps& caps,
                              const LoadSpec& load, std::size_t n);

CompareReport compare_regions(const CTRegion& analytic, const RatePredicate& region_contains,
                              const SoloCaps& caps, const LoadSpec& load, std::size_t n,
                              const NumericPolicy& policy = {});

}  // namespace ctr

#endif
