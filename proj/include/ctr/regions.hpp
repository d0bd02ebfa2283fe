// Completion-time-region constructors for GBC and all GIC regimes, the
// polygon-based CTR pipeline, membership tests and boundary export.
#ifndef CTR_REGIONS_HPP
#define CTR_REGIONS_HPP

#include <optional>
#include <vector>

#include "ctr/channels.hpp"
#include "ctr/core.hpp"

namespace ctr {

enum class RegionTag { Exact, Achievable, Outer };

const char* to_string(RegionTag tag);

struct Ray {
    CompletionTimePair base;
    double dx{0.0};
    double dy{0.0};
};

// Oriented half-plane nx*d1 + ny*d2 >= c with unit normal (nx, ny).
struct HalfPlane {
    double nx{0.0};
    double ny{0.0};
    double c{0.0};
};

// Smooth boundary descriptor of a GBC sub-region: the curve traced by the
// power split over [p_lo, p_hi].
struct GbcArc {
    GbcChannel channel;
    LoadSpec load;
    double p_lo{0.0};
    double p_hi{0.0};
};

// One convex half of a completion-time region. The vertex chain runs from the
// axis-parallel ray base (front) to the shared 45-degree ray base C-bar (back);
// membership is the side half-plane plus either the chain's oriented edges or
// the GBC parametric-boundary test.
class ConvexCTSubregion {
  public:
    static ConvexCTSubregion from_chain(int side, std::vector<CompletionTimePair> chain,
                                        const NumericPolicy& policy = {});
    static ConvexCTSubregion from_gbc_arc(int side, std::vector<CompletionTimePair> chain,
                                          GbcArc arc);

    int side() const { return side_; }
    const std::vector<CompletionTimePair>& vertices() const { return vertices_; }
    const CompletionTimePair& diag_base() const { return vertices_.back(); }
    const std::optional<GbcArc>& arc() const { return arc_; }

    Ray axis_ray() const;  // vertical from the front vertex (side 1), horizontal (side 2)
    Ray diag_ray() const { return {vertices_.back(), 1.0, 1.0}; }

    bool contains(const CompletionTimePair& d, double eps) const;

  private:
    int side_{0};
    std::vector<CompletionTimePair> vertices_;
    std::vector<HalfPlane> edges_;
    std::optional<GbcArc> arc_;
};

struct CTRegion {
    ConvexCTSubregion sub1;
    ConvexCTSubregion sub2;
    RegionTag tag{RegionTag::Exact};

    bool contains(const CompletionTimePair& d, double eps = 1e-9) const {
        return sub1.contains(d, eps) || sub2.contains(d, eps);
    }
    std::vector<CompletionTimePair> all_vertices() const;
};

bool ctr_contains(const CTRegion& ctr, const CompletionTimePair& d,
                  const NumericPolicy& policy = {});

// Exact completion-time region of the Gaussian broadcast channel with smooth
// sub-region boundaries kept in power-split parametric form.
CTRegion gbc_ctr(const GbcChannel& ch, const LoadSpec& load, const NumericPolicy& policy = {});

// Product region {d_i >= tau_i / rate(P_i)} of the very-strong regime.
CTRegion very_strong_ctr(const GicChannel& ch, const LoadSpec& load,
                         const NumericPolicy& policy = {});

// Generic pipeline: maps the per-weight minimizer vertices of the rate region
// through the side mappings and assembles both convex sub-regions.
CTRegion polygon_ctr(const PolygonalRateRegion& region, const SoloCaps& caps,
                     const LoadSpec& load, RegionTag tag, const NumericPolicy& policy = {});

// Half-space alpha*d1 + beta*d2 >= rhs.
struct CtConstraint {
    double alpha{0.0};
    double beta{0.0};
    double rhs{0.0};
};

// Literal inequality list of the strong-regime closed form, case-split on the
// load ratio. Emitted for comparison only; the span-constrained membership
// test remains the authoritative region.
struct StrongCtrClosedForm {
    int case_id{0};
    std::vector<CtConstraint> constraints;

    bool contains(const CompletionTimePair& d, double eps = 1e-9) const;
};

StrongCtrClosedForm strong_ctr_closed_form(const GicChannel& ch, const LoadSpec& load);

// n >= 2 points tracing the lower-left boundary from the d2-axis ray around
// to the d1-axis ray.
std::vector<CompletionTimePair> ctr_boundary(const CTRegion& ctr, std::size_t n);

}  // namespace ctr

#endif
