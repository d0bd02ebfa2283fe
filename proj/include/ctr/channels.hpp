// Channel models, interference-regime classification, canonical rate-region
// constructors, and the polygonal rate-region model with validation.
#ifndef CTR_CHANNELS_HPP
#define CTR_CHANNELS_HPP

#include <cstddef>
#include <vector>

#include "ctr/core.hpp"

namespace ctr {

// Scalar Gaussian broadcast channel Y_i = h_i X + Z_i with E[X^2] <= P.
// User ordering is fixed: h1 >= h2 (receiver 2 is the degraded one).
struct GbcChannel {
    double h1{1.0};
    double h2{1.0};
    double P{1.0};
};

// Gaussian interference channel in standard form:
//   Y1 = X1 + b X2 + Z1,  Y2 = a X1 + X2 + Z2,  E[X_i^2] <= P_i.
struct GicChannel {
    double a{0.0};
    double b{0.0};
    double P1{1.0};
    double P2{1.0};
};

enum class Regime { VeryStrong, Strong, Weak, Mixed };

const char* to_string(Regime r);

void validate(const GbcChannel& ch);
void validate(const GicChannel& ch);

// Total over valid channels:
//   VeryStrong  iff a >= sqrt(1+P2) and b >= sqrt(1+P1)  (boundary inclusive)
//   Strong      iff 1 <= a < sqrt(1+P2) and 1 <= b < sqrt(1+P1)
//   Weak        iff a < 1 and b < 1
//   Mixed       otherwise
Regime classify(const GicChannel& ch);

SoloCaps solo_caps(const GbcChannel& ch);  // (rate(h1^2 P), rate(h2^2 P))
SoloCaps solo_caps(const GicChannel& ch);  // (rate(P1), rate(P2))

// Boundary point of the GBC capacity region for the power split power1 in [0,P]:
//   ( rate(h1^2 power1), rate(h2^2 P) - rate(h2^2 power1) ).
RatePair gbc_boundary_point(const GbcChannel& ch, double power1);

bool gbc_region_contains(const GbcChannel& ch, const RatePair& r,
                         const NumericPolicy& policy = {});

// Normalized line coefficients of one dominant-face segment: a*r1 + b*r2 = 1.
struct PolygonSegment {
    double a{0.0};
    double b{0.0};
};

// Convex rate region bounded by a chain of line segments A_1..A_J running from
// the r2-axis end of the dominant face to the r1-axis end. Segment j joins
// A_j to A_{j+1}; coefficients satisfy a_1 = 0 < a_2 < ... < a_{J-1} and
// b_1 > b_2 > ... > b_{J-1} = 0. Indices are 1-based throughout.
class PolygonalRateRegion {
  public:
    // Computes and checks the segment coefficients; throws std::invalid_argument
    // naming the offending point or segment on non-convex or mis-shaped input.
    static PolygonalRateRegion validated(std::vector<RatePair> points,
                                         const NumericPolicy& policy = {});

    const std::vector<RatePair>& points() const { return points_; }
    const std::vector<PolygonSegment>& segments() const { return segments_; }

    std::size_t vertex_count() const { return points_.size(); }   // J
    std::size_t segment_count() const { return segments_.size(); }  // J-1

    const RatePair& point(std::size_t j) const { return points_.at(j - 1); }
    const PolygonSegment& segment(std::size_t j) const { return segments_.at(j - 1); }

    double max_r1() const { return points_.back().r1; }
    double max_r2() const { return points_.front().r2; }

    // True iff r >= 0 and a_j r1 + b_j r2 <= 1 + eps for every segment.
    bool contains(double r1, double r2, double eps) const;

  private:
    PolygonalRateRegion() = default;
    std::vector<RatePair> points_;
    std::vector<PolygonSegment> segments_;
};

// Capacity pentagon of the strong-interference regime:
//   r1 <= rate(P1), r2 <= rate(P2),
//   r1 + r2 <= min{rate(P1 + b^2 P2), rate(a^2 P1 + P2)}.
PolygonalRateRegion strong_ic_polygon(const GicChannel& ch, const NumericPolicy& policy = {});

double strong_sum_rate(const GicChannel& ch);

// Capacity rectangle of the very-strong regime: 0 <= r_i <= rate(P_i).
PolygonalRateRegion very_strong_rectangle(const GicChannel& ch, const NumericPolicy& policy = {});

enum class EtwKind { Achievable, Outer };

// Etkin-Tse-Wang rate region for the weak/mixed regimes (Achievable), or the
// matching capacity outer bound (Outer), assembled by half-plane intersection
// and pruned to extreme points. At most six extreme points survive.
PolygonalRateRegion etw_polygon(const GicChannel& ch, EtwKind kind,
                                const NumericPolicy& policy = {});

struct LoadRayHit {
    RatePair point;       // C: boundary point with r2/r1 = tau2/tau1
    std::size_t segment;  // j*: 1-based index of the containing segment
};

// Intersection of the load ray r2/r1 = tau2/tau1 with the dominant face.
// When C coincides with a vertex the smaller adjacent segment index is kept.
LoadRayHit intersect_load_ray(const PolygonalRateRegion& region, const LoadSpec& load);

struct GbcLoadRayHit {
    RatePair point;  // C
    double power1;   // P1' generating C
};

// Solves rate(h1^2 P1) * tau2 = (rate(h2^2 P) - rate(h2^2 P1)) * tau1 for P1 by
// bisection (left side increasing, right side decreasing on [0, P]).
GbcLoadRayHit intersect_load_ray(const GbcChannel& ch, const LoadSpec& load,
                                 const NumericPolicy& policy = {});

}  // namespace ctr

#endif
