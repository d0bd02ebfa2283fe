#include "ctr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ctr/ctmap.hpp"

namespace ctr {

TangentLine gbc_tangent(const GbcChannel& ch, double power1) {
    validate(ch);
    if (!(power1 >= 0.0 && power1 <= ch.P))
        throw std::domain_error("gbc_tangent: power split outside [0, P]");
    const RatePair r = gbc_boundary_point(ch, power1);
    const double h1s = ch.h1 * ch.h1;
    const double h2s = ch.h2 * ch.h2;
    const SoloCaps caps = solo_caps(ch);
    TangentLine t;
    t.power1 = power1;
    t.g = (1.0 / h1s + power1) / (1.0 / h2s + power1);
    const double den = r.r2 + t.g * r.r1;
    t.b = 1.0 / den;
    t.a = t.g / den;
    t.w1 = 1.0 - t.b * caps.cap2;
    t.w2 = t.a * caps.cap1;
    return t;
}

namespace {

SolverResult gbc_side_min(const GbcChannel& ch, const LoadSpec& load, double w, int side,
                          double p1_ray, const NumericPolicy& policy) {
    const SoloCaps caps = solo_caps(ch);
    const double w_at_c = side == 1 ? gbc_tangent(ch, p1_ray).w1 : gbc_tangent(ch, p1_ray).w2;
    const double p_end = side == 1 ? ch.P : 0.0;
    const double w_at_end = side == 1 ? gbc_tangent(ch, p_end).w1 : gbc_tangent(ch, p_end).w2;

    SolverResult res;
    res.side = side;
    double p1;
    if (side == 1) {
        // weights grow from w1(C) at the ray point to w1(B) at power1 = P
        if (w <= w_at_c) {
            p1 = p1_ray;
            res.weight_interval = {0.0, w_at_c};
        } else if (w >= w_at_end) {
            p1 = ch.P;
            res.weight_interval = {w_at_end, 1.0};
        } else {
            p1 = bisect_increasing([&](double p) { return gbc_tangent(ch, p).w1; }, p1_ray,
                                   ch.P, w, policy.eps_root);
            res.weight_interval = {w, w};
        }
        res.minimizer_rate = gbc_boundary_point(ch, p1);
        res.minimizer_ct = map_side1(res.minimizer_rate, load, caps.cap2, policy);
    } else {
        // weights grow from w2(A) at power1 = 0 to w2(C) at the ray point
        if (w <= w_at_end) {
            p1 = 0.0;
            res.weight_interval = {0.0, w_at_end};
        } else if (w >= w_at_c) {
            p1 = p1_ray;
            res.weight_interval = {w_at_c, 1.0};
        } else {
            p1 = bisect_increasing([&](double p) { return gbc_tangent(ch, p).w2; }, 0.0,
                                   p1_ray, w, policy.eps_root);
            res.weight_interval = {w, w};
        }
        res.minimizer_rate = gbc_boundary_point(ch, p1);
        res.minimizer_ct = map_side2(res.minimizer_rate, load, caps.cap1, policy);
    }
    res.objective = w * res.minimizer_ct.d1 + (1.0 - w) * res.minimizer_ct.d2;
    return res;
}

}  // namespace

GbcMinResult gbc_min_weighted(const GbcChannel& ch, const LoadSpec& load, double w,
                              const NumericPolicy& policy) {
    validate(ch);
    validate(load);
    if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("weight out of [0,1]");
    const GbcLoadRayHit hit = intersect_load_ray(ch, load, policy);
    GbcMinResult out;
    out.side1 = gbc_side_min(ch, load, w, 1, hit.power1, policy);
    out.side2 = gbc_side_min(ch, load, w, 2, hit.power1, policy);
    out.best = out.side1.objective <= out.side2.objective ? out.side1 : out.side2;
    return out;
}

PartitionSet polygon_partitions(const PolygonalRateRegion& region, const SoloCaps& caps,
                                const LoadSpec& load) {
    validate(caps);
    validate(load);
    const std::size_t J = region.vertex_count();
    if (caps.cap1 < region.max_r1() - 1e-9 || caps.cap2 < region.max_r2() - 1e-9)
        throw std::invalid_argument("polygon_partitions: solo caps below region extent");

    const LoadRayHit hit = intersect_load_ray(region, load);
    PartitionSet ps;
    ps.j_star = hit.segment;
    ps.ray_point = hit.point;

    // w1_j = 1 - cap2 * b_j increases in j up to w1_{J-1} = 1;
    // w2_j = cap1 * a_j increases in j from w2_1 = 0.
    auto w1_of = [&](std::size_t j) { return 1.0 - caps.cap2 * region.segment(j).b; };
    auto w2_of = [&](std::size_t j) { return caps.cap1 * region.segment(j).a; };

    ps.k1_star = 0;
    for (std::size_t j = ps.j_star; j <= J - 1; ++j) {
        if (w1_of(j) >= 0.0) {
            ps.k1_star = j;
            break;
        }
    }
    if (ps.k1_star == 0) throw std::logic_error("polygon_partitions: no admissible side-1 weight");
    ps.k2_star = 0;
    for (std::size_t j = ps.j_star; j >= 1; --j) {
        if (w2_of(j) <= 1.0) {
            ps.k2_star = j;
            break;
        }
    }
    if (ps.k2_star == 0) throw std::logic_error("polygon_partitions: no admissible side-2 weight");

    for (std::size_t j = ps.k1_star; j <= J - 1; ++j) ps.pi1.push_back(w1_of(j));
    ps.pi1.back() = 1.0;  // w1_{J-1} = 1 by the b_{J-1} = 0 model invariant
    for (std::size_t j = 2; j <= ps.k2_star; ++j) ps.pi2.push_back(w2_of(j));
    ps.pi2.push_back(1.0);
    return ps;
}

SolverResult polygon_min_weighted(const PolygonalRateRegion& region, const SoloCaps& caps,
                                  const LoadSpec& load, double w, int side,
                                  const NumericPolicy& policy) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("weight out of [0,1]");
    if (side != 1 && side != 2) throw std::domain_error("side must be 1 or 2");
    const PartitionSet ps = polygon_partitions(region, caps, load);
    const std::vector<double>& uppers = side == 1 ? ps.pi1 : ps.pi2;

    // first interval whose upper endpoint covers w (ties pick the lower index)
    std::size_t l = uppers.size();
    for (std::size_t i = 0; i < uppers.size(); ++i) {
        if (w <= uppers[i]) {
            l = i + 1;
            break;
        }
    }
    if (l > uppers.size()) throw std::logic_error("polygon_min_weighted: weight not covered");

    SolverResult res;
    res.side = side;
    res.weight_interval = {l >= 2 ? uppers[l - 2] : 0.0, uppers[l - 1]};
    bool at_ray_point;
    std::size_t vertex_index = 0;
    if (side == 1) {
        // C is reachable only when k1* == j*, in which case it owns interval 1
        at_ray_point = (ps.k1_star == ps.j_star && l == 1);
        if (!at_ray_point) vertex_index = l + ps.k1_star - 1;
    } else {
        at_ray_point = (l == ps.j_star);
        if (!at_ray_point) vertex_index = l + 1;
    }
    res.minimizer_rate = at_ray_point ? ps.ray_point : region.point(vertex_index);
    res.minimizer_ct = side == 1 ? map_side1(res.minimizer_rate, load, caps.cap2, policy)
                                 : map_side2(res.minimizer_rate, load, caps.cap1, policy);
    res.objective = w * res.minimizer_ct.d1 + (1.0 - w) * res.minimizer_ct.d2;
    return res;
}

NonconvexityCertificate nonconvexity_certificate(const GbcChannel& ch, const LoadSpec& load,
                                                 const NumericPolicy& policy) {
    const GbcLoadRayHit hit = intersect_load_ray(ch, load, policy);
    const TangentLine t = gbc_tangent(ch, hit.power1);
    NonconvexityCertificate cert;
    cert.w1_at_c = t.w1;
    cert.w2_at_c = t.w2;
    cert.s1 = t.w1 / (t.w1 - 1.0);
    if (t.w2 >= 1.0 - 1e-15) {
        cert.s2 = -std::numeric_limits<double>::infinity();
        cert.s2_unbounded = true;
    } else {
        cert.s2 = t.w2 / (t.w2 - 1.0);
    }
    cert.nonconvex = cert.w1_at_c < cert.w2_at_c - policy.eps_member;
    return cert;
}

}  // namespace ctr
