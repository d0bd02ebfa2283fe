#include "ctr/regions.hpp"

#include <algorithm>
#include <cmath>

#include "ctr/ctmap.hpp"
#include "ctr/optimize.hpp"

namespace ctr {

const char* to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::Exact: return "exact";
        case RegionTag::Achievable: return "achievable";
        case RegionTag::Outer: return "outer";
    }
    return "?";
}

namespace {

void dedupe_chain(std::vector<CompletionTimePair>& chain, double tol) {
    std::vector<CompletionTimePair> out;
    for (const CompletionTimePair& p : chain) {
        if (!out.empty() &&
            std::max(std::abs(p.d1 - out.back().d1), std::abs(p.d2 - out.back().d2)) <= tol)
            continue;
        out.push_back(p);
    }
    chain = std::move(out);
}

double side_sign(int side) { return side == 1 ? 1.0 : -1.0; }

}  // namespace

ConvexCTSubregion ConvexCTSubregion::from_chain(int side, std::vector<CompletionTimePair> chain,
                                                const NumericPolicy& policy) {
    if (side != 1 && side != 2) throw std::invalid_argument("sub-region side must be 1 or 2");
    if (chain.empty()) throw std::invalid_argument("sub-region chain is empty");
    dedupe_chain(chain, policy.eps_member);
    for (const CompletionTimePair& v : chain) {
        validate(v);
        const double gap = side == 1 ? v.d2 - v.d1 : v.d1 - v.d2;
        if (gap < -policy.eps_member * (1.0 + std::abs(v.d1)))
            throw std::logic_error("sub-region vertex violates its side constraint");
    }

    ConvexCTSubregion sub;
    sub.side_ = side;

    // Turn consistency along [axis ray] -> chain -> [diagonal ray]:
    // counter-clockwise for side 1, clockwise for side 2.
    const double sgn = side_sign(side);
    std::vector<std::pair<double, double>> dirs;
    dirs.emplace_back(side == 1 ? 0.0 : -1.0, side == 1 ? -1.0 : 0.0);  // incoming axis ray
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        dirs.emplace_back(chain[i + 1].d1 - chain[i].d1, chain[i + 1].d2 - chain[i].d2);
    dirs.emplace_back(1.0, 1.0);  // outgoing diagonal ray
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
        const double cross = dirs[i].first * dirs[i + 1].second - dirs[i].second * dirs[i + 1].first;
        const double scale = std::hypot(dirs[i].first, dirs[i].second) *
                             std::hypot(dirs[i + 1].first, dirs[i + 1].second);
        if (sgn * cross < -1e-9 * scale)
            throw std::logic_error("sub-region chain is not convex");
    }

    // Facets as oriented half-planes; orientation fixed by a point deep inside
    // the recession cone.
    const CompletionTimePair& back = chain.back();
    double big = 1.0;
    for (const CompletionTimePair& v : chain) big = std::max({big, v.d1, v.d2});
    const double K = 10.0 * big;
    const double ref1 = back.d1 + (side == 1 ? K : 3.0 * K);
    const double ref2 = back.d2 + (side == 1 ? 3.0 * K : K);

    auto push_edge = [&](double nx, double ny, double c) {
        const double norm = std::hypot(nx, ny);
        HalfPlane h{nx / norm, ny / norm, c / norm};
        if (h.nx * ref1 + h.ny * ref2 < h.c) {
            h.nx = -h.nx;
            h.ny = -h.ny;
            h.c = -h.c;
        }
        sub.edges_.push_back(h);
    };
    // axis-ray facet
    if (side == 1)
        push_edge(1.0, 0.0, chain.front().d1);
    else
        push_edge(0.0, 1.0, chain.front().d2);
    // chain segment facets
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const CompletionTimePair& p = chain[i];
        const CompletionTimePair& q = chain[i + 1];
        push_edge(p.d2 - q.d2, q.d1 - p.d1, (p.d2 - q.d2) * p.d1 + (q.d1 - p.d1) * p.d2);
    }
    sub.vertices_ = std::move(chain);
    return sub;
}

ConvexCTSubregion ConvexCTSubregion::from_gbc_arc(int side, std::vector<CompletionTimePair> chain,
                                                  GbcArc arc) {
    if (side != 1 && side != 2) throw std::invalid_argument("sub-region side must be 1 or 2");
    ConvexCTSubregion sub;
    sub.side_ = side;
    sub.vertices_ = std::move(chain);
    sub.arc_ = std::move(arc);
    return sub;
}

Ray ConvexCTSubregion::axis_ray() const {
    if (side_ == 1) return {vertices_.front(), 0.0, 1.0};
    return {vertices_.front(), 1.0, 0.0};
}

bool ConvexCTSubregion::contains(const CompletionTimePair& d, double eps) const {
    if (!(std::isfinite(d.d1) && std::isfinite(d.d2)) || d.d1 <= 0.0 || d.d2 <= 0.0) return false;
    const double slack = eps * (1.0 + std::max(std::abs(d.d1), std::abs(d.d2)));
    const double gap = side_ == 1 ? d.d2 - d.d1 : d.d1 - d.d2;
    if (gap < -slack) return false;

    if (arc_) {
        const GbcChannel& ch = arc_->channel;
        const LoadSpec& load = arc_->load;
        const double h1s = ch.h1 * ch.h1;
        const double h2s = ch.h2 * ch.h2;
        const double cap1 = snr_to_rate(h1s * ch.P);
        const double cap2 = snr_to_rate(h2s * ch.P);
        if (side_ == 1) {
            // need some split p1 in [p_lo, p_hi] with d1 >= tau1/rate(h1^2 p1)
            // and d2 >= curve(p1); the curve grows with p1, so test the
            // smallest admissible split.
            const double r1need = load.tau1 / d.d1;
            if (r1need > cap1 + eps) return false;
            const double p1req = rate_to_snr(std::min(r1need, cap1)) / h1s;
            const double p1 = std::clamp(p1req, arc_->p_lo, arc_->p_hi);
            const double bound =
                load.tau2 / cap2 + snr_to_rate(h2s * p1) * load.tau1 / (cap2 * snr_to_rate(h1s * p1));
            return d.d2 >= bound - slack;
        }
        const double r2need = load.tau2 / d.d2;
        if (r2need > cap2 + eps) return false;
        const double pcap = rate_to_snr(std::max(cap2 - r2need, 0.0)) / h2s;
        const double p1 = std::clamp(pcap, arc_->p_lo, arc_->p_hi);
        const double r1 = snr_to_rate(h1s * p1);
        const double r2 = cap2 - snr_to_rate(h2s * p1);
        const double bound = load.tau1 / cap1 + (cap1 - r1) * load.tau2 / (cap1 * r2);
        return d.d1 >= bound - slack;
    }

    for (const HalfPlane& h : edges_) {
        if (h.nx * d.d1 + h.ny * d.d2 < h.c - slack) return false;
    }
    return true;
}

std::vector<CompletionTimePair> CTRegion::all_vertices() const {
    std::vector<CompletionTimePair> v = sub1.vertices();
    v.insert(v.end(), sub2.vertices().begin(), sub2.vertices().end());
    return v;
}

bool ctr_contains(const CTRegion& ctr, const CompletionTimePair& d, const NumericPolicy& policy) {
    return ctr.contains(d, policy.eps_member);
}

CTRegion gbc_ctr(const GbcChannel& ch, const LoadSpec& load, const NumericPolicy& policy) {
    validate(ch);
    validate(load);
    const SoloCaps caps = solo_caps(ch);
    const GbcLoadRayHit hit = intersect_load_ray(ch, load, policy);
    const CompletionTimePair c_bar = map_side1(hit.point, load, caps.cap2, policy);
    const CompletionTimePair b_bar = map_side1({caps.cap1, 0.0}, load, caps.cap2, policy);
    const CompletionTimePair a_bar = map_side2({0.0, caps.cap2}, load, caps.cap1, policy);

    CTRegion out;
    out.tag = RegionTag::Exact;
    out.sub1 = ConvexCTSubregion::from_gbc_arc(1, {b_bar, c_bar},
                                               GbcArc{ch, load, hit.power1, ch.P});
    out.sub2 = ConvexCTSubregion::from_gbc_arc(2, {a_bar, c_bar},
                                               GbcArc{ch, load, 0.0, hit.power1});
    return out;
}

CTRegion very_strong_ctr(const GicChannel& ch, const LoadSpec& load, const NumericPolicy& policy) {
    const Regime regime = classify(ch);
    if (regime != Regime::VeryStrong)
        throw std::domain_error("very_strong_ctr: wrong interference regime");
    validate(load);
    const SoloCaps caps = solo_caps(ch);
    const double x0 = load.tau1 / caps.cap1;
    const double y0 = load.tau2 / caps.cap2;
    const double m = std::max(x0, y0);
    const CompletionTimePair corner{x0, y0};
    const CompletionTimePair c_bar{m, m};

    CTRegion out;
    out.tag = RegionTag::Exact;
    std::vector<CompletionTimePair> chain1{c_bar};
    std::vector<CompletionTimePair> chain2{c_bar};
    if (y0 > x0 + policy.eps_member)
        chain1.insert(chain1.begin(), corner);
    else if (x0 > y0 + policy.eps_member)
        chain2.insert(chain2.begin(), corner);
    out.sub1 = ConvexCTSubregion::from_chain(1, std::move(chain1), policy);
    out.sub2 = ConvexCTSubregion::from_chain(2, std::move(chain2), policy);
    return out;
}

CTRegion polygon_ctr(const PolygonalRateRegion& region, const SoloCaps& caps,
                     const LoadSpec& load, RegionTag tag, const NumericPolicy& policy) {
    const PartitionSet ps = polygon_partitions(region, caps, load);
    const std::size_t J = region.vertex_count();
    const CompletionTimePair c_bar = map_side1(ps.ray_point, load, caps.cap2, policy);

    // side 1: minimizer vertices A_{J-1} ... downwards, then C-bar
    std::vector<CompletionTimePair> chain1;
    {
        const std::size_t lowest = ps.k1_star == ps.j_star ? ps.j_star + 1 : ps.k1_star;
        for (std::size_t j = J - 1; j >= lowest && j >= 1; --j)
            chain1.push_back(map_side1(region.point(j), load, caps.cap2, policy));
        chain1.push_back(c_bar);
        dedupe_chain(chain1, policy.eps_member);
    }
    // side 2: A_2 ... A_upper, then C-bar
    std::vector<CompletionTimePair> chain2;
    {
        const std::size_t upper = ps.k2_star == ps.j_star ? ps.k2_star : ps.k2_star + 1;
        for (std::size_t j = 2; j <= upper; ++j)
            chain2.push_back(map_side2(region.point(j), load, caps.cap1, policy));
        chain2.push_back(c_bar);
        dedupe_chain(chain2, policy.eps_member);
    }

    CTRegion out;
    out.tag = tag;
    out.sub1 = ConvexCTSubregion::from_chain(1, std::move(chain1), policy);
    out.sub2 = ConvexCTSubregion::from_chain(2, std::move(chain2), policy);
    return out;
}

bool StrongCtrClosedForm::contains(const CompletionTimePair& d, double eps) const {
    if (!(d.d1 > 0.0 && d.d2 > 0.0)) return false;
    for (const CtConstraint& c : constraints) {
        if (c.alpha * d.d1 + c.beta * d.d2 < c.rhs - eps * (1.0 + std::abs(c.rhs))) return false;
    }
    return true;
}

StrongCtrClosedForm strong_ctr_closed_form(const GicChannel& ch, const LoadSpec& load) {
    const Regime regime = classify(ch);
    if (regime != Regime::Strong)
        throw std::domain_error("strong_ctr_closed_form: wrong interference regime");
    validate(load);
    const double g1 = snr_to_rate(ch.P1);
    const double g2 = snr_to_rate(ch.P2);
    const double rs = strong_sum_rate(ch);
    const double ratio = load.tau2 / load.tau1;
    const double sum = load.tau1 + load.tau2;

    StrongCtrClosedForm out;
    out.constraints.push_back({g1, 0.0, load.tau1});
    out.constraints.push_back({0.0, g2, load.tau2});
    if (ratio <= (rs - g1) / g1) {
        out.case_id = 1;
        out.constraints.push_back({g1, rs - g1, sum});
    } else if (ratio >= g2 / (rs - g2)) {
        out.case_id = 3;
        out.constraints.push_back({rs - g2, g2, sum});
    } else {
        out.case_id = 2;
        out.constraints.push_back({rs - g2, g2, sum});
        out.constraints.push_back({g1, rs - g1, sum});
    }
    return out;
}

namespace {

CompletionTimePair gbc_arc_point(const GbcArc& arc, int side, double p1) {
    const GbcChannel& ch = arc.channel;
    const double h1s = ch.h1 * ch.h1;
    const double h2s = ch.h2 * ch.h2;
    const double cap1 = snr_to_rate(h1s * ch.P);
    const double cap2 = snr_to_rate(h2s * ch.P);
    const double r1 = snr_to_rate(h1s * p1);
    const double r2 = cap2 - snr_to_rate(h2s * p1);
    if (side == 1)
        return {arc.load.tau1 / r1, arc.load.tau2 / cap2 + (cap2 - r2) * arc.load.tau1 / (cap2 * r1)};
    return {arc.load.tau1 / cap1 + (cap1 - r1) * arc.load.tau2 / (cap1 * r2), arc.load.tau2 / r2};
}

}  // namespace

std::vector<CompletionTimePair> ctr_boundary(const CTRegion& ctr, std::size_t n) {
    if (n < 2) throw std::domain_error("ctr_boundary: need n >= 2");

    // Anchors traverse sub1 front-to-back, then sub2 back-to-front; refinable
    // gaps carry either a GBC arc parameter interval or a straight segment.
    struct Gap {
        const GbcArc* arc;  // null for straight segments
        int side;
        double p_from, p_to;
    };
    std::vector<CompletionTimePair> anchors;
    std::vector<Gap> gaps;  // gaps[i] sits between anchors[i] and anchors[i+1]

    const std::vector<CompletionTimePair>& v1 = ctr.sub1.vertices();
    for (std::size_t i = 0; i < v1.size(); ++i) {
        if (!anchors.empty()) {
            if (ctr.sub1.arc())
                gaps.push_back({&*ctr.sub1.arc(), 1, ctr.sub1.arc()->p_hi, ctr.sub1.arc()->p_lo});
            else
                gaps.push_back({nullptr, 1, 0.0, 0.0});
        }
        anchors.push_back(v1[i]);
    }
    const std::vector<CompletionTimePair>& v2 = ctr.sub2.vertices();
    for (std::size_t i = v2.size(); i-- > 0;) {
        const CompletionTimePair& p = v2[i];
        if (std::abs(p.d1 - anchors.back().d1) <= 1e-12 &&
            std::abs(p.d2 - anchors.back().d2) <= 1e-12)
            continue;  // shared C-bar
        if (ctr.sub2.arc())
            gaps.push_back({&*ctr.sub2.arc(), 2, ctr.sub2.arc()->p_hi, ctr.sub2.arc()->p_lo});
        else
            gaps.push_back({nullptr, 2, 0.0, 0.0});
        anchors.push_back(p);
    }

    if (n <= anchors.size()) {
        std::vector<CompletionTimePair> out;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t idx =
                n == 1 ? 0 : (i * (anchors.size() - 1) + (n - 1) / 2) / (n - 1);
            out.push_back(anchors[idx]);
        }
        return out;
    }

    // extension points on the two axis rays
    double big = 1.0;
    for (const CompletionTimePair& p : anchors) big = std::max({big, p.d1, p.d2});
    const Ray r1 = ctr.sub1.axis_ray();
    const Ray r2 = ctr.sub2.axis_ray();
    std::vector<CompletionTimePair> out;
    out.push_back({r1.base.d1 + r1.dx * big, r1.base.d2 + r1.dy * big});
    std::size_t budget = n - anchors.size() - 2;

    // spread refinement points round-robin over the gaps
    std::vector<std::size_t> per_gap(gaps.size(), 0);
    for (std::size_t i = 0; !gaps.empty() && i < budget; ++i) ++per_gap[i % gaps.size()];
    if (gaps.empty()) {
        // no interior gaps: stack the spare points on the first ray
        for (std::size_t i = 0; i < budget; ++i)
            out.push_back({r1.base.d1 + r1.dx * big * (budget - i) / (budget + 1.0),
                           r1.base.d2 + r1.dy * big * (budget - i) / (budget + 1.0)});
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        out.push_back(anchors[i]);
        if (i < gaps.size() && per_gap[i] > 0) {
            const Gap& g = gaps[i];
            for (std::size_t k = 1; k <= per_gap[i]; ++k) {
                const double t = static_cast<double>(k) / (per_gap[i] + 1.0);
                if (g.arc) {
                    out.push_back(gbc_arc_point(*g.arc, g.side, g.p_from + t * (g.p_to - g.p_from)));
                } else {
                    out.push_back({anchors[i].d1 + t * (anchors[i + 1].d1 - anchors[i].d1),
                                   anchors[i].d2 + t * (anchors[i + 1].d2 - anchors[i].d2)});
                }
            }
        }
    }
    out.push_back({r2.base.d1 + r2.dx * big, r2.base.d2 + r2.dy * big});
    return out;
}

}  // namespace ctr
