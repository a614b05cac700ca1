#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "willmore/geometry.hpp"
#include "willmore/linalg.hpp"
#include "willmore/spherical.hpp"

using namespace willmore;

namespace {

constexpr double kPi = std::numbers::pi;

SurfaceSampler round_sphere() {
  return [](Cplx z) {
    const Eigen::Vector3d p = stereographic_point(z);
    RVec out(3);
    out << p(0), p(1), p(2);
    return out;
  };
}

// Conformally parametrized flat torus in S^3 with radii (r1, r2),
// r1^2 + r2^2 = 1; its mean curvature norm is |r2/r1 - r1/r2| / 2 and its
// Gauss curvature vanishes.
SurfaceSampler flat_torus(double r1) {
  const double r2 = std::sqrt(1.0 - r1 * r1);
  return [r1, r2](Cplx z) {
    RVec out(4);
    out << r1 * std::cos(z.real() / r1), r1 * std::sin(z.real() / r1),
        r2 * std::cos(z.imag() / r2), r2 * std::sin(z.imag() / r2);
    return out;
  };
}

SurfaceSampler veronese(int m) {
  return [m](Cplx z) { return veronese_point(m, z); };
}

}  // namespace

TEST_CASE("stereographic chart of the round sphere: conformal, K = 1") {
  const SurfaceGrid grid =
      make_surface_grid(round_sphere(), -1.0, 1.0, -1.0, 1.0, 0.02);
  CHECK(grid.nu == 101);
  CHECK(grid.nv == 101);
  CHECK(grid.unit_norm_residual() < 1e-14);
  CHECK(conformality_defect(grid) < 2e-3);
  // The chart fills the ambient sphere, so the normal space is trivial and
  // the defect is pure finite-difference truncation at stencil h = 0.02.
  CHECK(mean_curvature_defect(grid) < 5e-7);
  const FieldStats k = field_stats(gauss_curvature(grid));
  CHECK(k.mean == doctest::Approx(1.0).epsilon(3e-3));
  CHECK(k.max - k.min < 1e-2);
}

TEST_CASE("sheared chart is flagged as non-conformal") {
  const SurfaceSampler sheared = [](Cplx z) {
    const Eigen::Vector3d p =
        stereographic_point(Cplx(z.real(), 2.0 * z.imag()));
    RVec out(3);
    out << p(0), p(1), p(2);
    return out;
  };
  const SurfaceGrid grid =
      make_surface_grid(sheared, -0.5, 0.5, -0.5, 0.5, 0.02);
  CHECK(conformality_defect(grid) > 0.1);
}

TEST_CASE("flat torus patch: |H| = 3/4, K = 0, patch energy") {
  const double r1 = std::sqrt(0.8);
  const SurfaceGrid grid =
      make_surface_grid(flat_torus(r1), 0.0, 0.8, 0.0, 0.8, 0.01);
  REQUIRE(grid.nu == 81);
  CHECK(grid.unit_norm_residual() < 1e-14);

  // The chart is conformal but not isothermal-normalized per coordinate;
  // the centered-difference defect is the analytic truncation term
  // h^2/3 * (1/r2^2 - 1/r1^2) of |y_u|^2 - |y_v|^2.
  const double r2sq = 1.0 - r1 * r1;
  const double conf_expected =
      grid.h * grid.h / 3.0 * (1.0 / r2sq - 1.0 / (r1 * r1));
  CHECK(conformality_defect(grid) ==
        doctest::Approx(conf_expected).epsilon(0.05));

  // |H| = |r2/r1 - r1/r2| / 2 = (2 - 1/2) / 2 = 3/4 for r1^2 = 0.8.
  // Probes stay two nodes inside the rectangle: the curvature stencil
  // reaches two spacings from its center.
  const double h_expected = 0.75;
  double h_min = 1e300, h_max = 0.0;
  for (int iu = 2; iu + 2 < grid.nu; iu += 8) {
    for (int iv = 2; iv + 2 < grid.nv; iv += 8) {
      const SurfaceFields f =
          surface_fields(sampler_from_grid(grid), grid.point(iu, iv), grid.h);
      h_min = std::min(h_min, f.mean_norm);
      h_max = std::max(h_max, f.mean_norm);
    }
  }
  // Fourth-derivative truncation of the Laplacian costs ~1e-5 relative at
  // h = 0.01 (measured 0.749992 at every probe: the torus is homogeneous).
  CHECK(h_min == doctest::Approx(h_expected).epsilon(3e-5));
  CHECK(h_max == doctest::Approx(h_expected).epsilon(3e-5));
  CHECK(mean_curvature_defect(grid) ==
        doctest::Approx(h_expected).epsilon(3e-5));

  const FieldStats k = field_stats(gauss_curvature(grid));
  CHECK(std::abs(k.mean) < 1e-6);
  CHECK(std::max(std::abs(k.min), std::abs(k.max)) < 1e-5);

  // integrand |H|^2 - K + 1 = 1.5625 over the doubly-interior rectangle of
  // side 76 * h = 0.76 (trapezoidal weights).  The centered-difference area
  // element carries a sinc^2 factor, h^2/3 * (1/r1^2 + 1/r2^2) ~ 2e-4 low.
  const double expected = 1.5625 * 0.76 * 0.76;
  CHECK(willmore_energy(grid) == doctest::Approx(expected).epsilon(3e-4));
}

TEST_CASE("degree-2 equivariant sphere: pointwise fields at fine stencil") {
  const SurfaceSampler y = veronese(2);
  for (const Cplx z : {Cplx(0.3, 0.4), Cplx(-0.7, 0.1), Cplx(1.2, -0.5)}) {
    const SurfaceFields f = surface_fields(y, z, 1e-3);
    CHECK(f.conformality < 1e-5);
    CHECK(f.mean_norm < 1e-3);
    CHECK(f.gauss == doctest::Approx(1.0 / 3.0).epsilon(3e-3));
  }
}

TEST_CASE("round sphere: closed-surface quadrature recovers the invariants") {
  const QuadratureOptions opt;  // hemisphere charts, 256 x 128 nodes
  const SphereReport r = sphere_report(veronese(1), veronese(1), opt);
  CHECK(r.area == doctest::Approx(4.0 * kPi).epsilon(1e-3));
  CHECK(std::abs(r.gauss_bonnet - 4.0 * kPi) < 1e-2);
  // The gap is the quadrature of the squared finite-difference mean
  // curvature, bounded by minimality^2 * area ~ 1.3e-5.
  CHECK(std::abs(r.willmore - (r.area - 4.0 * kPi)) < 1e-4);
  CHECK(r.conformality < 1e-5);
  CHECK(r.minimality < 1e-3);
  CHECK(r.gauss.mean == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("inverted second chart reproduces the symmetric shortcut") {
  const SurfaceSampler y = veronese(2);
  QuadratureOptions opt;
  opt.radius = 8.0;
  opt.radial = 64;
  opt.angular = 32;
  const SphereReport direct = sphere_report(y, y, opt);
  const SphereReport inverted = sphere_report(y, make_inverted_sampler(y), opt);
  // The two second charts sample the same points up to the rounding of
  // -1/conj(w), which perturbs the finite differences at ~1e-11.
  CHECK(std::abs(direct.area - inverted.area) < 1e-9);
  CHECK(std::abs(direct.gauss_bonnet - inverted.gauss_bonnet) < 1e-9);
  CHECK(std::abs(direct.willmore - inverted.willmore) < 1e-9);
  CHECK(std::abs(direct.minimality - inverted.minimality) < 1e-9);
}

TEST_CASE("grid sampler lookups reproduce the stored lattice exactly") {
  // Power-of-two spacing makes every stencil probe land bit-exactly on a
  // node, so the grid-backed fields match the direct ones double-for-double.
  const SurfaceGrid grid =
      make_surface_grid(veronese(2), -1.0, 1.0, -1.0, 1.0, 0.25);
  REQUIRE(grid.nu == 9);
  const SurfaceSampler lookup = sampler_from_grid(grid);
  const SurfaceSampler direct = veronese(2);

  const Cplx node = grid.point(4, 3);
  CHECK(max_abs(RMat(lookup(node) - grid.sample(4, 3))) == 0.0);

  const SurfaceFields from_grid = surface_fields(lookup, node, grid.h);
  const SurfaceFields from_fn = surface_fields(direct, node, grid.h);
  CHECK(from_grid.E == from_fn.E);
  CHECK(from_grid.conformality == from_fn.conformality);
  CHECK(from_grid.mean_norm == from_fn.mean_norm);

  CHECK_THROWS_AS(lookup(node + Cplx(0.3 * grid.h, 0.0)), SchemaError);
}

TEST_CASE("antipodal parity of the equivariant family") {
  for (int m = 1; m <= 4; ++m) {
    CHECK(antipodal_check(m, 200, 20260815u) < 1e-10);
  }
}

TEST_CASE("antipodal residual flags broken parity") {
  // Degree-2 surface checked with the odd parity is far from symmetric.
  const std::vector<Cplx> pts = {Cplx(0.5, 0.2), Cplx(-1.1, 0.4)};
  CHECK(antipodal_residual(veronese(2), -1, pts) > 0.5);
  CHECK(antipodal_residual(veronese(2), +1, pts) < 1e-12);
  CHECK_THROWS_AS(antipodal_residual(veronese(2), 2, pts), SchemaError);
  const std::vector<Cplx> origin = {Cplx(0.0, 0.0)};
  CHECK_THROWS_AS(antipodal_residual(veronese(2), 1, origin), SchemaError);
}

TEST_CASE("grid construction rejects malformed requests") {
  CHECK_THROWS_AS(make_surface_grid(veronese(1), 1.0, -1.0, -1.0, 1.0, 0.1),
                  SchemaError);
  CHECK_THROWS_AS(make_surface_grid(veronese(1), 0.0, 0.1, 0.0, 0.1, 0.2),
                  SchemaError);
  const SurfaceSampler inflated = [](Cplx z) {
    return RVec(1.1 * veronese_point(1, z));
  };
  CHECK_THROWS_AS(make_surface_grid(inflated, -1.0, 1.0, -1.0, 1.0, 0.25),
                  NumericalError);
}
