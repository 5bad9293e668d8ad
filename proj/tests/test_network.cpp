#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wdb/network.hpp"
#include "wdb/spherical.hpp"

using namespace wdb;

namespace {

// upper semicircular profile of a ball: bubble on the inside
GeneratingNetwork ball_profile(int n, double r, double cx = 0.0,
                               RegionLabel inside = RegionLabel::kB1) {
  GeneratingNetwork net{Dimension(n), {}};
  net.edges.push_back(make_arc({cx - r, 0.0}, {cx + r, 0.0}, -1.0 / r,
                               RegionLabel::kExt, inside));
  return net;
}

// hand-built unit-weight equal-volume double bubble profile (rho = 1)
GeneratingNetwork unit_bubble_profile(int n) {
  GeneratingNetwork net{Dimension(n), {}};
  const Vec2 j{0.0, 1.0};
  const double s3 = std::sqrt(3.0);
  net.edges.push_back(
      make_arc(j, {-s3, 0.0}, s3 / 2.0, RegionLabel::kB1, RegionLabel::kExt));
  net.edges.push_back(
      make_arc(j, {s3, 0.0}, -s3 / 2.0, RegionLabel::kExt, RegionLabel::kB2));
  net.edges.push_back(
      make_segment(j, {0.0, 0.0}, RegionLabel::kB2, RegionLabel::kB1));
  return net;
}

// lens: unit upper semicircle over a shallower arc through (+-1, 0);
// the region between them is B1, the pocket below the inner arc is B2
GeneratingNetwork lens_profile(int n) {
  GeneratingNetwork net{Dimension(n), {}};
  net.edges.push_back(make_arc({-1.0, 0.0}, {1.0, 0.0}, -1.0,
                               RegionLabel::kExt, RegionLabel::kB1));
  net.edges.push_back(make_arc({1.0, 0.0}, {-1.0, 0.0}, 0.5,
                               RegionLabel::kB2, RegionLabel::kB1));
  return net;
}

}  // namespace

TEST_CASE("weight classification") {
  CHECK(classify_weights({1.0, 1.0, 1.0}) == WeightClass::kStrict);
  CHECK(classify_weights({2.5, 1.0, 1.0}) == WeightClass::kInterfaceDominant);
  CHECK(classify_weights({0.5, 2.0, 1.0}) == WeightClass::kNested1);
  CHECK(classify_weights({0.5, 1.0, 2.0}) == WeightClass::kNested2);
  CHECK(classify_weights({2.0, 1.0, 1.0}) == WeightClass::kBoundary);
  CHECK(classify_weights({0.5, 1.5, 1.0}) == WeightClass::kBoundary);
  CHECK_THROWS_AS(classify_weights({0.0, 0.0, 0.0}), domain_error);
  CHECK_THROWS_AS(classify_weights({-1.0, 1.0, 1.0}), domain_error);
}

TEST_CASE("arc geometry round trip") {
  const MeridianEdge upper = make_arc({-1.0, 0.0}, {1.0, 0.0}, -1.0,
                                      RegionLabel::kExt, RegionLabel::kB1);
  const ArcGeometry g = arc_geometry(upper);
  CHECK(g.center.x == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(g.center.y == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(g.radius == doctest::Approx(1.0));
  CHECK(std::fabs(g.sweep) == doctest::Approx(M_PI));
  const Vec2 top = edge_point(upper, 0.5);
  CHECK(top.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(top.y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(edge_length(upper) == doctest::Approx(M_PI));
  CHECK(edge_min_y(upper) == doctest::Approx(0.0));
}

TEST_CASE("volume: revolved half-disk is the ball") {
  CHECK(volume(ball_profile(3, 1.0), RegionLabel::kB1) ==
        doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
  CHECK(volume(ball_profile(4, 2.0), RegionLabel::kB1) ==
        doctest::Approx(unit_ball_volume(4) * 16.0).epsilon(1e-12));
  CHECK_THROWS_AS(volume(ball_profile(3, 1.0), RegionLabel::kExt),
                  domain_error);
}

TEST_CASE("lens volumes: scanline oracle and 2-D monte carlo") {
  const GeneratingNetwork net = lens_profile(3);
  const double v1 = volume(net, RegionLabel::kB1);
  const double v2 = volume(net, RegionLabel::kB2);

  CHECK(v1 == doctest::Approx(wdb_test::scanline_volume(net, RegionLabel::kB1))
                  .epsilon(1e-6));
  CHECK(v2 == doctest::Approx(wdb_test::scanline_volume(net, RegionLabel::kB2))
                  .epsilon(1e-6));

  // 2-D Monte Carlo of (n-1) alpha_{n-1} double-integral of y^{n-2}
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(0.0, 1.0);
  const double s3 = std::sqrt(3.0);
  double acc_b1 = 0.0, acc_b2 = 0.0;
  const int samples = 4'000'000;
  for (int i = 0; i < samples; ++i) {
    const double x = ux(rng), y = uy(rng);
    const bool in_outer = x * x + y * y < 1.0;
    const bool above_inner = x * x + (y + s3) * (y + s3) > 4.0;
    if (in_outer && above_inner) acc_b1 += y;
    if (in_outer && !above_inner && y > 0.0) acc_b2 += y;
  }
  const double cell = 2.0 / samples;  // box area / samples
  CHECK(v1 == doctest::Approx(2.0 * M_PI * acc_b1 * cell).epsilon(5e-3));
  CHECK(v2 == doctest::Approx(2.0 * M_PI * acc_b2 * cell).epsilon(5e-3));
}

TEST_CASE("weighted areas of the unit sphere profile") {
  const GeneratingNetwork net = ball_profile(3, 1.0);
  const AreaBreakdown a = weighted_area(net, {1.0, 1.0, 1.0});
  CHECK(a.ext1 == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
  CHECK(a.ext2 == 0.0);
  CHECK(a.interface_ == 0.0);
  const AreaBreakdown half = weighted_area(net, {1.0, 0.5, 1.0});
  CHECK(half.q == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("junction residuals: equilateral star and perturbation") {
  auto star = [](double rot) {
    GeneratingNetwork net{Dimension(3), {}};
    const Vec2 c{0.0, 2.0};
    const double a1 = -M_PI / 2.0;            // interface straight down
    const double a2 = a1 + 2.0 * M_PI / 3.0;  // exterior of bubble 2
    const double a3 = a1 - 2.0 * M_PI / 3.0 + rot;  // exterior of bubble 1
    net.edges.push_back(make_segment(c, c + dir(a1), RegionLabel::kB2,
                                     RegionLabel::kB1));
    net.edges.push_back(make_segment(c, c + dir(a2), RegionLabel::kExt,
                                     RegionLabel::kB2));
    net.edges.push_back(make_segment(c, c + dir(a3), RegionLabel::kB1,
                                     RegionLabel::kExt));
    return net;
  };
  const auto balanced = junction_residuals(star(0.0), {1.0, 1.0, 1.0});
  REQUIRE(balanced.size() == 1);
  CHECK(balanced[0].residual == doctest::Approx(0.0).epsilon(1e-14));

  const auto perturbed = junction_residuals(star(0.1), {1.0, 1.0, 1.0});
  // rotating one unit tangent by delta changes the sum by 2 sin(delta/2)
  CHECK(perturbed[0].residual ==
        doctest::Approx(2.0 * std::sin(0.05)).epsilon(1e-12));

  GeneratingNetwork quad = star(0.0);
  quad.edges.push_back(make_segment({0.0, 2.0}, {0.5, 2.5}, RegionLabel::kB1,
                                    RegionLabel::kExt));
  CHECK_THROWS_AS(junction_residuals(quad, {1.0, 1.0, 1.0}), structural_error);
}

TEST_CASE("unit double bubble profile: volumes match and validate is clean") {
  const GeneratingNetwork net = unit_bubble_profile(3);
  CHECK(validate(net).empty());
  const double v1 = volume(net, RegionLabel::kB1);
  const double v2 = volume(net, RegionLabel::kB2);
  CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
  CHECK(v1 == doctest::Approx(wdb_test::scanline_volume(net, RegionLabel::kB1))
                  .epsilon(1e-6));
  const auto res = junction_residuals(net, {1.0, 1.0, 1.0});
  REQUIRE(res.size() == 1);
  CHECK(res[0].residual < 1e-10);
}

TEST_CASE("validate: violations are reported") {
  SUBCASE("trapped exterior hollow") {
    GeneratingNetwork net = ball_profile(3, 2.0);
    net.edges.push_back(make_arc({-1.0, 0.0}, {1.0, 0.0}, -1.0,
                                 RegionLabel::kB1, RegionLabel::kExt));
    const auto v = validate(net);
    REQUIRE(!v.empty());
    bool found = false;
    for (const auto& viol : v)
      if (viol.code == ViolationCode::kExtDisconnected) found = true;
    CHECK(found);
  }
  SUBCASE("edge dipping below the axis") {
    GeneratingNetwork net = ball_profile(3, 1.0);
    net.edges.push_back(make_segment({5.0, 1.0}, {6.0, -0.4}, RegionLabel::kB2,
                                     RegionLabel::kExt));
    bool found = false;
    for (const auto& viol : validate(net))
      if (viol.code == ViolationCode::kBelowAxis) found = true;
    CHECK(found);
  }
  SUBCASE("same label on both sides") {
    GeneratingNetwork net = ball_profile(3, 1.0);
    net.edges[0].left = RegionLabel::kB1;
    bool found = false;
    for (const auto& viol : validate(net))
      if (viol.code == ViolationCode::kSameLabelBothSides) found = true;
    CHECK(found);
  }
  SUBCASE("crossing edges") {
    GeneratingNetwork net = ball_profile(3, 1.0);
    net.edges.push_back(make_segment({-2.0, 0.5}, {2.0, 0.7}, RegionLabel::kB2,
                                     RegionLabel::kExt));
    bool found = false;
    for (const auto& viol : validate(net))
      if (viol.code == ViolationCode::kEdgeCrossing) found = true;
    CHECK(found);
  }
  SUBCASE("dangling node off the axis") {
    GeneratingNetwork net = ball_profile(3, 1.0);
    net.edges.push_back(make_segment({0.0, 1.0}, {0.3, 1.8}, RegionLabel::kB2,
                                     RegionLabel::kExt));
    bool dangling = false;
    for (const auto& viol : validate(net))
      if (viol.code == ViolationCode::kDanglingNode) dangling = true;
    CHECK(dangling);
  }
  SUBCASE("mislabeled unbounded face") {
    GeneratingNetwork net = ball_profile(3, 1.0);
    net.edges[0].left = RegionLabel::kB2;
    bool found = false;
    for (const auto& viol : validate(net))
      if (viol.code == ViolationCode::kUnboundedNotExt) found = true;
    CHECK(found);
  }
}

TEST_CASE("region label probing") {
  const GeneratingNetwork net = unit_bubble_profile(3);
  CHECK(region_label_at(net, {-1.0, 0.3}) == RegionLabel::kB1);
  CHECK(region_label_at(net, {1.0, 0.3}) == RegionLabel::kB2);
  CHECK(region_label_at(net, {0.0, 3.0}) == RegionLabel::kExt);
  CHECK(region_label_at(net, {9.0, 1.0}) == RegionLabel::kExt);
}

TEST_CASE("scaling covariance of volume and area") {
  const GeneratingNetwork net = unit_bubble_profile(4);
  const double lambda = 1.7;
  const GeneratingNetwork big = dilated(net, lambda);
  const double v_ratio = volume(big, RegionLabel::kB1) /
                         volume(net, RegionLabel::kB1);
  CHECK(v_ratio == doctest::Approx(std::pow(lambda, 4)).epsilon(1e-9));
  const AreaBreakdown a0 = weighted_area(net, {1.0, 1.0, 1.0});
  const AreaBreakdown a1 = weighted_area(big, {1.0, 1.0, 1.0});
  CHECK(a1.q / a0.q == doctest::Approx(std::pow(lambda, 3)).epsilon(1e-9));
}

TEST_CASE("edge reversal leaves volume and weighted area unchanged") {
  GeneratingNetwork net = lens_profile(4);
  const double v1 = volume(net, RegionLabel::kB1);
  const double q = weighted_area(net, {0.7, 1.0, 1.3}).q;
  net.edges[0] = reversed(net.edges[0]);
  net.edges[1] = reversed(net.edges[1]);
  CHECK(volume(net, RegionLabel::kB1) == doctest::Approx(v1).epsilon(1e-12));
  CHECK(weighted_area(net, {0.7, 1.0, 1.3}).q ==
        doctest::Approx(q).epsilon(1e-12));
}

TEST_CASE("junction residual invariance: translation and mirror relabel") {
  GeneratingNetwork net = unit_bubble_profile(3);
  const WeightTriple w{0.9, 1.1, 0.8};
  const double r0 = junction_residuals(net, w)[0].residual;

  GeneratingNetwork shifted = net;
  for (auto& e : shifted.edges) {
    e.p.x += 2.5;
    e.q.x += 2.5;
  }
  CHECK(junction_residuals(shifted, w)[0].residual ==
        doctest::Approx(r0).epsilon(1e-12));

  // mirror x -> -x with B1 <-> B2 and w1 <-> w2
  GeneratingNetwork mirrored = net;
  auto swap_label = [](RegionLabel l) {
    if (l == RegionLabel::kB1) return RegionLabel::kB2;
    if (l == RegionLabel::kB2) return RegionLabel::kB1;
    return l;
  };
  for (auto& e : mirrored.edges) {
    e.p.x = -e.p.x;
    e.q.x = -e.q.x;
    e.curvature = -e.curvature;
    e.left = swap_label(e.left);
    e.right = swap_label(e.right);
    e = reversed(e);  // restore left/right orientation after mirroring
  }
  const WeightTriple wswap{w.w0, w.w2, w.w1};
  CHECK(junction_residuals(mirrored, wswap)[0].residual ==
        doctest::Approx(r0).epsilon(1e-12));
}

TEST_CASE("volume oracle agreement across a corpus of networks") {
  std::vector<GeneratingNetwork> corpus;
  corpus.push_back(ball_profile(3, 1.0));
  corpus.push_back(ball_profile(3, 0.5, 2.0));
  corpus.push_back(ball_profile(4, 1.3));
  corpus.push_back(ball_profile(5, 0.8));
  corpus.push_back(lens_profile(3));
  corpus.push_back(lens_profile(4));
  corpus.push_back(unit_bubble_profile(3));
  corpus.push_back(unit_bubble_profile(4));
  corpus.push_back(unit_bubble_profile(5));
  {
    GeneratingNetwork two = ball_profile(3, 1.0, -2.0);
    two.edges.push_back(make_arc({1.0, 0.0}, {3.0, 0.0}, -1.0,
                                 RegionLabel::kExt, RegionLabel::kB2));
    corpus.push_back(two);
  }
  {
    GeneratingNetwork nested = ball_profile(3, 2.0, 0.0, RegionLabel::kB2);
    nested.edges.push_back(make_arc({-1.0, 0.0}, {1.0, 0.0}, -1.0,
                                    RegionLabel::kB2, RegionLabel::kB1));
    corpus.push_back(nested);
  }
  REQUIRE(corpus.size() >= 10);
  for (const auto& net : corpus) {
    for (const RegionLabel l : {RegionLabel::kB1, RegionLabel::kB2}) {
      const double direct = volume(net, l);
      const double oracle = wdb_test::scanline_volume(net, l);
      if (direct == 0.0) {
        CHECK(std::fabs(oracle) < 1e-9);
      } else {
        CHECK(direct == doctest::Approx(oracle).epsilon(1e-6));
      }
    }
  }
}
