#include "ctr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctr {

std::vector<CompletionTimePair> grid_ct_cloud(const RatePredicate& region_contains,
                                              const SoloCaps& caps, const LoadSpec& load,
                                              std::size_t n) {
    validate(caps);
    validate(load);
    if (n < 10) throw std::domain_error("grid_ct_cloud: need n >= 10");
    std::vector<CompletionTimePair> cloud;
    cloud.reserve(n * n / 2);
    const double step1 = caps.cap1 / static_cast<double>(n - 1);
    const double step2 = caps.cap2 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double r1 = static_cast<double>(i) * step1;
        for (std::size_t k = 0; k < n; ++k) {
            const double r2 = static_cast<double>(k) * step2;
            if (r1 <= 0.0 && r2 <= 0.0) continue;
            if (!region_contains(r1, r2)) continue;
            if (r2 * load.tau1 <= r1 * load.tau2) {
                if (r1 > 0.0)
                    cloud.push_back(map_side1({r1, std::min(r2, caps.cap2)}, load, caps.cap2));
            } else if (r2 > 0.0) {
                cloud.push_back(map_side2({std::min(r1, caps.cap1), r2}, load, caps.cap1));
            }
        }
    }
    return cloud;
}

GridMin grid_min_weighted(const std::vector<CompletionTimePair>& cloud, double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("weight out of [0,1]");
    if (cloud.empty()) throw std::invalid_argument("grid_min_weighted: empty cloud");
    GridMin best{std::numeric_limits<double>::infinity(), {}};
    for (const CompletionTimePair& d : cloud) {
        const double obj = w * d.d1 + (1.0 - w) * d.d2;
        if (obj < best.objective) {
            best.objective = obj;
            best.argmin = d;
        }
    }
    return best;
}

GridMin grid_min_weighted(const RatePredicate& region_contains, const SoloCaps& caps,
                          const LoadSpec& load, double w, std::size_t n) {
    return grid_min_weighted(grid_ct_cloud(region_contains, caps, load, n), w);
}

CtBox default_box(const std::vector<CompletionTimePair>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("default_box: no vertices");
    CtBox box{std::numeric_limits<double>::infinity(), 0.0,
              std::numeric_limits<double>::infinity(), 0.0};
    for (const CompletionTimePair& v : vertices) {
        box.d1_lo = std::min(box.d1_lo, 0.5 * v.d1);
        box.d1_hi = std::max(box.d1_hi, 4.0 * v.d1);
        box.d2_lo = std::min(box.d2_lo, 0.5 * v.d2);
        box.d2_hi = std::max(box.d2_hi, 4.0 * v.d2);
    }
    return box;
}

CompareReport compare_regions(const CtPredicate& analytic_contains, const CtBox& box,
                              const RatePredicate& region_contains, const SoloCaps& caps,
                              const LoadSpec& load, std::size_t n) {
    if (n < 10) throw std::domain_error("compare_regions: need n >= 10");
    CompareReport rep;
    rep.n = n;
    rep.box = box;
    const double s1 = (box.d1_hi - box.d1_lo) / static_cast<double>(n - 1);
    const double s2 = (box.d2_hi - box.d2_lo) / static_cast<double>(n - 1);

    auto oracle = [&](double d1, double d2) {
        if (d1 <= 0.0 || d2 <= 0.0) return false;
        return ct_achievable(region_contains, caps, load, {d1, d2});
    };
    // Certified depth of a point's membership status, measured by scanning
    // diagonal probes until the oracle answer flips; upward closure makes the
    // probe a sound certificate for the whole surrounding ball.
    auto depth = [&](double d1, double d2, bool inside) {
        const double step = std::max(s1, s2);
        for (std::size_t k = 1; k <= n; ++k) {
            const double off = static_cast<double>(k) * step;
            const bool certified = inside ? oracle(d1 - off, d2 - off) : !oracle(d1 + off, d2 + off);
            if (!certified) return static_cast<double>(k - 1) * step;
        }
        return static_cast<double>(n) * step;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const double d1 = box.d1_lo + static_cast<double>(i) * s1;
        for (std::size_t k = 0; k < n; ++k) {
            const double d2 = box.d2_lo + static_cast<double>(k) * s2;
            const bool o = oracle(d1, d2);
            const bool a = analytic_contains({d1, d2});
            if (a == o) {
                ++(o ? rep.both : rep.neither);
                continue;
            }
            const bool safely_in = oracle(d1 - 3.0 * s1, d2 - 3.0 * s2);
            const bool safely_out = !oracle(d1 + 3.0 * s1, d2 + 3.0 * s2);
            if (!safely_in && !safely_out) {
                ++rep.boundary_band;
                continue;
            }
            if (a) {
                ++rep.analytic_only;
                rep.worst_analytic_only = std::max(rep.worst_analytic_only, depth(d1, d2, false));
            } else {
                ++rep.oracle_only;
                rep.worst_oracle_only = std::max(rep.worst_oracle_only, depth(d1, d2, true));
            }
        }
    }
    rep.pass = rep.analytic_only == 0 && rep.oracle_only == 0;
    return rep;
}

CompareReport compare_regions(const CTRegion& analytic, const RatePredicate& region_contains,
                              const SoloCaps& caps, const LoadSpec& load, std::size_t n,
                              const NumericPolicy& policy) {
    const CtBox box = default_box(analytic.all_vertices());
    auto pred = [&analytic, &policy](const CompletionTimePair& d) {
        return analytic.contains(d, policy.eps_member);
    };
    return compare_regions(pred, box, region_contains, caps, load, n);
}

}  // namespace ctr
