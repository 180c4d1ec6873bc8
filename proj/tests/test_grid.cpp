#include "doctest.h"

#include <numbers>
#include <sstream>

#include "fracsum/format.hpp"
#include "fracsum/grid.hpp"
#include "fracsum/parser.hpp"
#include "oracles.hpp"

using namespace fracsum;

TEST_CASE("deterministic 12-significant-digit formatting") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(-2.0 * testutil::kLn2) == "-1.38629436112");
    CHECK(format_complex(Complex(0.5, std::numbers::pi / 4.0)) == "0.5+0.785398163397i");
    CHECK(format_complex(Complex(0.5, -0.25)) == "0.5-0.25i");
    CHECK(format_complex(Complex(-1.5, 0.0)) == "-1.5");
}

TEST_CASE("small grid: statuses, spot values, exact row strings") {
    const CatalogExpr e = parse_catalog("1/k");
    GridOptions opt;
    opt.re_min = -1.0;
    opt.re_max = 1.0;
    opt.im_min = -1.0;
    opt.im_max = 1.0;
    opt.step = 1.0;
    const auto pts = evaluate_grid(e, opt);
    REQUIRE(pts.size() == 9);

    int poles = 0;
    for (const auto& p : pts)
        if (p.status == GridStatus::pole) {
            ++poles;
            CHECK(p.re == -1.0);
            CHECK(p.im == 0.0);
        }
    CHECK(poles == 1);

    std::ostringstream os;
    write_grid_csv(os, pts);
    const std::string csv = os.str();
    CHECK(csv.rfind("re,im,val_re,val_im,status\n", 0) == 0);
    CHECK(csv.find("-1,0,,,pole\n") != std::string::npos);
    CHECK(csv.find("0,0,0,0,ok\n") != std::string::npos);
    CHECK(csv.find("1,0,1,0,ok\n") != std::string::npos);

    // byte stability
    std::ostringstream os2;
    write_grid_csv(os2, evaluate_grid(e, opt));
    CHECK(os2.str() == csv);
}

TEST_CASE("row-major order: im outer ascending, re inner ascending") {
    GridOptions opt;
    opt.re_min = 0.0;
    opt.re_max = 1.0;
    opt.im_min = 0.0;
    opt.im_max = 1.0;
    opt.step = 0.5;
    const auto pts = evaluate_grid(parse_catalog("k"), opt);
    REQUIRE(pts.size() == 9);
    CHECK(pts[0].re == 0.0);
    CHECK(pts[0].im == 0.0);
    CHECK(pts[1].re == 0.5);
    CHECK(pts[1].im == 0.0);
    CHECK(pts[3].re == 0.0);
    CHECK(pts[3].im == 0.5);
    CHECK(pts[8].re == 1.0);
    CHECK(pts[8].im == 1.0);
}

TEST_CASE("default region matches the documented 121x121 layout") {
    const auto pts = evaluate_grid(parse_catalog("1/k"), GridOptions{});
    CHECK(pts.size() == 14641);
    int poles = 0;
    for (const auto& p : pts)
        if (p.status == GridStatus::pole) ++poles;
    CHECK(poles == 4);  // -4, -3, -2, -1 on the real axis
}

TEST_CASE("per-point failures surface as error status") {
    // nonzero multiple of 2*pi*i: every evaluation raises NonSummable
    const CatalogExpr bad = CatalogExpr::exponential(Complex(0.0, 4.0 * std::numbers::pi));
    GridOptions opt;
    opt.re_min = 0.0;
    opt.re_max = 0.5;
    opt.im_min = 0.0;
    opt.im_max = 0.0;
    opt.step = 0.5;
    const auto pts = evaluate_grid(bad, opt);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].status == GridStatus::error);
    std::ostringstream os;
    write_grid_csv(os, pts);
    CHECK(os.str().find(",,error\n") != std::string::npos);
}

TEST_CASE("bad grid parameters are bounds errors") {
    GridOptions opt;
    opt.step = 0.0;
    CHECK_THROWS_AS(evaluate_grid(parse_catalog("k"), opt), BoundsError);
    opt.step = 0.1;
    opt.re_min = 2.0;
    opt.re_max = 1.0;
    CHECK_THROWS_AS(evaluate_grid(parse_catalog("k"), opt), BoundsError);
}
