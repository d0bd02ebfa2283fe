#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "ctr/ctmap.hpp"
#include "doctest.h"

using namespace ctr;

namespace {

const LoadSpec kUnitLoad{1.0, 1.0};

// closed-form weighted objectives, written independently of the mappings:
//   D1 = (1-w) tau2/cap2 + tau1 (cap2 - (1-w) r2) / (cap2 r1)
//   D2 = w tau1/cap1 + tau2 (cap1 - w r1) / (cap1 r2)
double closed_form_objective(int side, const RatePair& r, const LoadSpec& load, double w,
                             const SoloCaps& caps) {
    if (side == 1) {
        const double wb = 1.0 - w;
        return wb * load.tau2 / caps.cap2 +
               load.tau1 * (caps.cap2 - wb * r.r2) / (caps.cap2 * r.r1);
    }
    return w * load.tau1 / caps.cap1 + load.tau2 * (caps.cap1 - w * r.r1) / (caps.cap1 * r.r2);
}

}  // namespace

TEST_CASE("side-1 mapping on worked points") {
    const CompletionTimePair d = map_side1({0.5, 0.25}, kUnitLoad, 1.0);
    CHECK(d.d1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.d2 == doctest::Approx(2.5).epsilon(1e-12));

    const double rs = 0.5 * std::log2(7.0);
    const CompletionTimePair corner = map_side1({1.0, rs - 1.0}, kUnitLoad, 1.0);
    CHECK(corner.d1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(corner.d2 == doctest::Approx(3.0 - rs).epsilon(1e-12));
    CHECK(corner.d2 == doctest::Approx(1.596322538971).epsilon(1e-9));

    CHECK(d.d1 <= d.d2);
    CHECK_THROWS_AS(map_side1({0.0, 0.25}, kUnitLoad, 1.0), std::domain_error);
    CHECK_THROWS_AS(map_side1({0.1, 0.5}, kUnitLoad, 1.0), std::domain_error);  // above ray
    CHECK_THROWS_AS(map_side1({0.5, 0.25}, kUnitLoad, 0.2), std::domain_error);  // r2 > phase2
}

TEST_CASE("side-2 mapping mirrors side 1") {
    const CompletionTimePair d = map_side2({0.5, 1.0}, kUnitLoad, 1.0);
    CHECK(d.d1 == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(d.d2 == doctest::Approx(1.0).epsilon(1e-12));

    const double rs = 0.5 * std::log2(7.0);
    const CompletionTimePair corner = map_side2({rs - 1.0, 1.0}, kUnitLoad, 1.0);
    CHECK(corner.d1 == doctest::Approx(1.596322538971).epsilon(1e-9));
    CHECK(corner.d2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(map_side2({0.5, 0.0}, kUnitLoad, 1.0), std::domain_error);
}

TEST_CASE("the two mappings agree on the load ray to 1e-12") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const LoadSpec load{u(rng), u(rng)};
        const double t = u(rng);
        const RatePair r{t * load.tau1, t * load.tau2};
        const double cap2 = r.r2 + u(rng);
        const double cap1 = r.r1 + u(rng);
        const CompletionTimePair a = map_side1(r, load, cap2);
        const CompletionTimePair b = map_side2(r, load, cap1);
        CHECK(std::abs(a.d1 - a.d2) <= 1e-12 * std::max(1.0, a.d1));
        CHECK(std::abs(a.d1 - b.d1) <= 1e-12 * std::max(1.0, a.d1));
        CHECK(std::abs(a.d2 - b.d2) <= 1e-12 * std::max(1.0, a.d2));
        CHECK(a.d1 == doctest::Approx(load.tau1 / r.r1).epsilon(1e-12));
    }
}

TEST_CASE("mapping coordinates are non-increasing in both rates") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    for (int i = 0; i < 2000; ++i) {
        const LoadSpec load{u(rng), u(rng)};
        const double ratio = load.tau2 / load.tau1;
        double r1 = u(rng);
        double r2 = std::min(u(rng), 0.95 * ratio * r1);
        if (r2 <= 0.0) continue;
        const double cap2 = std::max(r2, u(rng) + r2);
        const CompletionTimePair base = map_side1({r1, r2}, load, cap2);
        // bump either coordinate, staying on side 1
        const CompletionTimePair up1 = map_side1({r1 * 1.1, r2}, load, cap2);
        CHECK(up1.d1 <= base.d1 + 1e-12);
        CHECK(up1.d2 <= base.d2 + 1e-12);
        const double r2b = std::min(r2 * 1.05, std::min(cap2, ratio * r1));
        const CompletionTimePair up2 = map_side1({r1, r2b}, load, cap2);
        CHECK(up2.d1 <= base.d1 + 1e-12);
        CHECK(up2.d2 <= base.d2 + 1e-12);
    }
}

TEST_CASE("raising the phase-two rate never hurts") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    for (int i = 0; i < 2000; ++i) {
        const LoadSpec load{u(rng), u(rng)};
        const double ratio = load.tau2 / load.tau1;
        const double r1 = u(rng);
        const double r2 = std::min(u(rng), 0.9 * ratio * r1);
        if (r2 <= 0.0) continue;
        const double lo = r2 + 0.1 * u(rng);
        const double hi = lo + u(rng);
        CHECK(map_side1({r1, r2}, load, hi).d2 <= map_side1({r1, r2}, load, lo).d2 + 1e-12);
    }
}

TEST_CASE("objective equals the closed form to 1e-12") {
    const SoloCaps caps{1.0, 1.0};
    CHECK(weighted_ct_objective(1, {0.5, 0.25}, kUnitLoad, 0.0, caps) ==
          doctest::Approx(2.5).epsilon(1e-12));
    CHECK(weighted_ct_objective(1, {0.5, 0.25}, kUnitLoad, 1.0, caps) ==
          doctest::Approx(2.0).epsilon(1e-12));
    const double rs = 0.5 * std::log2(7.0);
    CHECK(weighted_ct_objective(2, {rs - 1.0, 1.0}, kUnitLoad, 0.5, caps) ==
          doctest::Approx(1.298161269486).epsilon(1e-9));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.05, 1.5);
    std::uniform_real_distribution<double> uw(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const LoadSpec load{u(rng), u(rng)};
        const SoloCaps caps2{u(rng) + 1.5, u(rng) + 1.5};
        const double ratio = load.tau2 / load.tau1;
        const double r1 = u(rng);
        const double r2 = std::min(u(rng), 0.95 * ratio * r1);
        if (r2 <= 0.0) continue;
        const double w = uw(rng);
        const double via_map = weighted_ct_objective(1, {r1, r2}, load, w, caps2);
        const double direct = closed_form_objective(1, {r1, r2}, load, w, caps2);
        CHECK(std::abs(via_map - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));

        const RatePair flipped{r2, r1};
        const LoadSpec flipped_load{load.tau2, load.tau1};
        const double via_map2 = weighted_ct_objective(2, flipped, flipped_load, w, caps2);
        const double direct2 = closed_form_objective(2, flipped, flipped_load, w, caps2);
        CHECK(std::abs(via_map2 - direct2) <= 1e-12 * std::max(1.0, std::abs(direct2)));
    }
}

TEST_CASE("constrained membership against the gbc region") {
    const GbcChannel unit{1.0, 1.0, 3.0};
    const RatePredicate pred = make_predicate(unit);
    const SoloCaps caps{1.0, 1.0};
    // reduced point (0.8333, 0.16667) sits just inside the boundary
    CHECK(constrained_membership(pred, caps, {0.8333, 0.5}, 0.6));
    CHECK_FALSE(constrained_membership(pred, caps, {0.8333, 0.55}, 0.6));
}

TEST_CASE("constrained membership against the strong pentagon") {
    const PolygonalRateRegion pentagon = strong_ic_polygon({1.0, 1.0, 3.0, 3.0});
    const RatePredicate pred = make_predicate(pentagon);
    const SoloCaps caps{1.0, 1.0};
    const double rs = 0.5 * std::log2(7.0);
    const double c = 1.0 / (3.0 - rs);  // = 0.626440 (reduction hits the pentagon corner)
    CHECK(constrained_membership(pred, caps, {1.0, c}, c));
    CHECK_FALSE(constrained_membership(pred, caps, {1.0, c + 0.01}, c));
}

TEST_CASE("c = 1 reduces to plain membership") {
    const PolygonalRateRegion pentagon = strong_ic_polygon({1.0, 1.0, 3.0, 3.0});
    const RatePredicate pred = make_predicate(pentagon);
    const SoloCaps caps{1.0, 1.0};
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.1);
    for (int i = 0; i < 5000; ++i) {
        const RatePair r{u(rng), u(rng)};
        CHECK(constrained_membership(pred, caps, r, 1.0) == pred(r.r1, r.r2));
    }
}

TEST_CASE("ct_achievable on the strong pentagon") {
    const PolygonalRateRegion pentagon = strong_ic_polygon({1.0, 1.0, 3.0, 3.0});
    const RatePredicate pred = make_predicate(pentagon);
    const SoloCaps caps{1.0, 1.0};
    CHECK(ct_achievable(pred, caps, kUnitLoad, {1.0, 1.596322538971}));
    CHECK_FALSE(ct_achievable(pred, caps, kUnitLoad, {1.3, 1.3}));
    // user 1 faster than its solo cap can ever be
    CHECK_FALSE(ct_achievable(pred, caps, kUnitLoad, {1.0 - 1e-3, 5.0}));
}

TEST_CASE("achievability is upward closed in completion time") {
    const PolygonalRateRegion pentagon = strong_ic_polygon({1.0, 1.0, 3.0, 3.0});
    const RatePredicate pred = make_predicate(pentagon);
    const SoloCaps caps{1.0, 1.0};
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ud(0.8, 4.0);
    std::uniform_real_distribution<double> bump(0.0, 2.0);
    for (int i = 0; i < 5000; ++i) {
        const CompletionTimePair d{ud(rng), ud(rng)};
        if (!ct_achievable(pred, caps, kUnitLoad, d)) continue;
        const CompletionTimePair worse{d.d1 + bump(rng), d.d2 + bump(rng)};
        CHECK(ct_achievable(pred, caps, kUnitLoad, worse));
    }
}
