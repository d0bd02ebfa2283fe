#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>

#include "ctr/oracle.hpp"
#include "doctest.h"

using namespace ctr;

namespace {
const GbcChannel kSym{1.0, 1.0, 3.0};
const LoadSpec kUnitLoad{1.0, 1.0};
const GicChannel kSymStrong{1.0, 1.0, 3.0, 3.0};
}  // namespace

TEST_CASE("every cloud point is achievable") {
    const PolygonalRateRegion pentagon = strong_ic_polygon(kSymStrong);
    const RatePredicate pred = make_predicate(pentagon);
    const SoloCaps caps{1.0, 1.0};
    const auto cloud = grid_ct_cloud(pred, caps, kUnitLoad, 100);
    CHECK(cloud.size() > 1000);
    for (const CompletionTimePair& d : cloud) {
        CHECK(ct_achievable(pred, caps, kUnitLoad, d));
    }
}

TEST_CASE("cloud staircase hugs the analytic boundary") {
    const PolygonalRateRegion pentagon = strong_ic_polygon(kSymStrong);
    const RatePredicate pred = make_predicate(pentagon);
    const SoloCaps caps{1.0, 1.0};
    const CTRegion region = polygon_ctr(pentagon, caps, kUnitLoad, RegionTag::Exact);
    const auto cloud = grid_ct_cloud(pred, caps, kUnitLoad, 500);
    const auto boundary = ctr_boundary(region, 21);
    for (std::size_t i = 1; i + 1 < boundary.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const CompletionTimePair& p : cloud) {
            best = std::min(best, std::max(std::abs(p.d1 - boundary[i].d1),
                                           std::abs(p.d2 - boundary[i].d2)));
        }
        CHECK(best <= 0.05);
    }
}

TEST_CASE("rectangle cloud bottoms out at the solo-cap corner") {
    const GicChannel ch{2.0, 2.0, 1.0, 3.0};
    const PolygonalRateRegion rect = very_strong_rectangle(ch);
    const SoloCaps caps = solo_caps(ch);
    const auto cloud = grid_ct_cloud(make_predicate(rect), caps, kUnitLoad, 200);
    double min_d1 = std::numeric_limits<double>::infinity();
    double min_d2 = std::numeric_limits<double>::infinity();
    bool corner_seen = false;
    for (const CompletionTimePair& d : cloud) {
        min_d1 = std::min(min_d1, d.d1);
        min_d2 = std::min(min_d2, d.d2);
        corner_seen = corner_seen || (std::abs(d.d1 - 1.0 / caps.cap1) < 1e-9 &&
                                      std::abs(d.d2 - 1.0 / caps.cap2) < 1e-9);
    }
    CHECK(min_d1 == doctest::Approx(1.0 / caps.cap1).epsilon(1e-12));
    CHECK(min_d2 == doctest::Approx(1.0 / caps.cap2).epsilon(1e-12));
    CHECK(corner_seen);
}

TEST_CASE("gbc cloud reaches the flat side-1 floor") {
    const RatePredicate pred = make_predicate(kSym);
    const SoloCaps caps = solo_caps(kSym);
    const auto cloud = grid_ct_cloud(pred, caps, kUnitLoad, 400);
    double min_d2 = std::numeric_limits<double>::infinity();
    for (const CompletionTimePair& d : cloud) {
        if (d.d1 <= d.d2) min_d2 = std::min(min_d2, d.d2);
    }
    CHECK(min_d2 == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("grid minimization brackets the exact solvers") {
    const RatePredicate gbc_pred = make_predicate(kSym);
    const auto gbc_cloud = grid_ct_cloud(gbc_pred, solo_caps(kSym), kUnitLoad, 2000);
    CHECK(grid_min_weighted(gbc_cloud, 0.5).objective == doctest::Approx(1.5).epsilon(0.01));
    // pure-d2 weight reaches the solo floor of user 2
    CHECK(grid_min_weighted(gbc_cloud, 0.0).objective == doctest::Approx(1.0).epsilon(0.01));

    const PolygonalRateRegion pentagon = strong_ic_polygon(kSymStrong);
    const auto pent_cloud =
        grid_ct_cloud(make_predicate(pentagon), {1.0, 1.0}, kUnitLoad, 2000);
    CHECK(grid_min_weighted(pent_cloud, 0.5).objective ==
          doctest::Approx(1.298161269486).epsilon(0.01));
}

TEST_CASE("exact regions pass the comparison harness") {
    const CompareReport gbc_rep = compare_regions(gbc_ctr(kSym, kUnitLoad), make_predicate(kSym),
                                                  solo_caps(kSym), kUnitLoad, 120);
    CHECK(gbc_rep.pass);
    CHECK(gbc_rep.analytic_only == 0);
    CHECK(gbc_rep.oracle_only == 0);
    CHECK(gbc_rep.both > 0);

    const GicChannel vs{2.5, 3.0, 2.0, 4.0};
    const CompareReport vs_rep =
        compare_regions(very_strong_ctr(vs, kUnitLoad), make_predicate(very_strong_rectangle(vs)),
                        solo_caps(vs), kUnitLoad, 120);
    CHECK(vs_rep.pass);
}

TEST_CASE("pentagon pipeline is sound against the membership test") {
    const PolygonalRateRegion pentagon = strong_ic_polygon(kSymStrong);
    const SoloCaps caps{1.0, 1.0};
    const CTRegion region = polygon_ctr(pentagon, caps, kUnitLoad, RegionTag::Exact);
    const CompareReport rep =
        compare_regions(region, make_predicate(pentagon), caps, kUnitLoad, 150);
    CHECK(rep.analytic_only == 0);
    CHECK(rep.pass);
}

TEST_CASE("edge loads exiting through the first or last segment stay sound") {
    const PolygonalRateRegion pentagon = strong_ic_polygon(kSymStrong);
    const SoloCaps caps{1.0, 1.0};
    for (const LoadSpec load : {LoadSpec{1.0, 0.05}, LoadSpec{0.05, 1.0}}) {
        const CTRegion region = polygon_ctr(pentagon, caps, load, RegionTag::Exact);
        const CompareReport rep =
            compare_regions(region, make_predicate(pentagon), caps, load, 150);
        CHECK(rep.pass);
    }
}

TEST_CASE("the literal case-2 constraint list fails against the membership test") {
    const StrongCtrClosedForm cf = strong_ctr_closed_form(kSymStrong, kUnitLoad);
    const PolygonalRateRegion pentagon = strong_ic_polygon(kSymStrong);
    const SoloCaps caps{1.0, 1.0};
    const CTRegion hull = polygon_ctr(pentagon, caps, kUnitLoad, RegionTag::Exact);
    const CtBox box = default_box(hull.all_vertices());
    const CompareReport rep = compare_regions(
        [&cf](const CompletionTimePair& d) { return cf.contains(d); }, box,
        make_predicate(pentagon), caps, kUnitLoad, 150);
    CHECK_FALSE(rep.pass);
    CHECK(rep.oracle_only > 0);
    CHECK(rep.analytic_only == 0);  // the conjunction is only ever too small
    CHECK(rep.worst_oracle_only > 0.0);
}

TEST_CASE("refining the grid does not grow the measured disagreement") {
    const StrongCtrClosedForm cf = strong_ctr_closed_form(kSymStrong, kUnitLoad);
    const PolygonalRateRegion pentagon = strong_ic_polygon(kSymStrong);
    const SoloCaps caps{1.0, 1.0};
    const CTRegion hull = polygon_ctr(pentagon, caps, kUnitLoad, RegionTag::Exact);
    const CtBox box = default_box(hull.all_vertices());
    auto cf_pred = [&cf](const CompletionTimePair& d) { return cf.contains(d); };
    const CompareReport coarse =
        compare_regions(cf_pred, box, make_predicate(pentagon), caps, kUnitLoad, 80);
    const CompareReport fine =
        compare_regions(cf_pred, box, make_predicate(pentagon), caps, kUnitLoad, 160);
    const double coarse_step = (box.d1_hi - box.d1_lo) / 79.0;
    CHECK(fine.worst_oracle_only <= coarse.worst_oracle_only + 2.0 * coarse_step);

    // exact regions stay clean at any resolution
    const CompareReport a = compare_regions(gbc_ctr(kSym, kUnitLoad), make_predicate(kSym),
                                            solo_caps(kSym), kUnitLoad, 60);
    const CompareReport b = compare_regions(gbc_ctr(kSym, kUnitLoad), make_predicate(kSym),
                                            solo_caps(kSym), kUnitLoad, 120);
    CHECK(a.pass);
    CHECK(b.pass);
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(grid_ct_cloud(make_predicate(kSym), solo_caps(kSym), kUnitLoad, 5),
                    std::domain_error);
    CHECK_THROWS_AS(grid_min_weighted(std::vector<CompletionTimePair>{}, 0.5),
                    std::invalid_argument);
    const auto cloud = grid_ct_cloud(make_predicate(kSym), solo_caps(kSym), kUnitLoad, 20);
    CHECK_THROWS_AS(grid_min_weighted(cloud, 1.5), std::domain_error);
}
