#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "willmore/frames.hpp"
#include "willmore/linalg.hpp"
#include "willmore/so3.hpp"

using namespace willmore;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference orbit of the equivariant immersion in the representation basis:
// rotate the base vector by the polar frame of z. The lightcone projection
// of the built frames must reproduce its adapted-basis coordinates.
RVec rep_orbit(const So3Triple& rep, int m, Cplx z) {
  RVec y0 = RVec::Zero(2 * m + 1);
  y0(2 * m) = 1.0;
  const double r = std::abs(z);
  const double theta = (r == 0.0) ? 0.0 : std::atan2(z.imag(), z.real());
  const RMat rot = expm(RMat(-theta * rep.r(3)));
  const RMat radial = expm(RMat(-2.0 * std::atan(r) * rep.r(2)));
  return rot * radial * y0;
}

}  // namespace

TEST_CASE("monodromy data satisfies every structural residual, m = 1..4") {
  for (int m = 1; m <= 4; ++m) {
    const HomogeneousSphereData data = veronese_monodromy(m);
    CHECK(data.form.dim == 2 * m + 2);
    CHECK(data.split.head == 4);
    CHECK(data.split.tail == 2 * m - 2);
    CHECK(data.weight ==
          doctest::Approx(std::sqrt(m * (m + 1) / 2.0)).epsilon(1e-15));
    const MonodromyResiduals r = monodromy_residuals(data);
    CHECK(r.loop_structure < 1e-13);
    CHECK(r.rotation_algebra < 1e-12);
    CHECK(r.a3_membership < 1e-13);
    CHECK(r.a3_block_diagonal < 1e-13);
    CHECK(r.harmonicity < 1e-12);
    CHECK(r.basis_orthogonality < 1e-13);
    CHECK(r.degree_windows);
    CHECK(r.max() < 1e-12);
  }
  CHECK_THROWS_AS(veronese_monodromy(0), SchemaError);
}

TEST_CASE("rotation generator is already in canonical layout (frozen, m=2,3)") {
  {
    const HomogeneousSphereData data = veronese_monodromy(2);
    RMat expected = RMat::Zero(6, 6);
    expected(2, 3) = 1.0;
    expected(3, 2) = -1.0;
    expected(4, 5) = 2.0;
    expected(5, 4) = -2.0;
    CHECK(max_abs(RMat(data.A3 - expected)) < 1e-12);
  }
  {
    const HomogeneousSphereData data = veronese_monodromy(3);
    RMat expected = RMat::Zero(8, 8);
    expected(2, 3) = 1.0;
    expected(3, 2) = -1.0;
    expected(4, 5) = 2.0;
    expected(5, 4) = -2.0;
    expected(6, 7) = 3.0;
    expected(7, 6) = -3.0;
    CHECK(max_abs(RMat(data.A3 - expected)) < 1e-12);
  }
}

TEST_CASE("frames: exact base identity, group membership, polar agreement") {
  const HomogeneousSphereData data = veronese_monodromy(2);
  const int dim = data.form.dim;

  for (const double theta : {0.0, 0.7, kPi / 2, 2.1, kPi}) {
    const RMat base = frame_sphere(data, Cplx(0.0, 0.0), theta);
    CHECK(max_abs(RMat(base - RMat::Identity(dim, dim))) == 0.0);

    for (const Cplx z : {Cplx(0.3, 0.4), Cplx(-0.9, 0.2), Cplx(1.2, -0.7),
                         Cplx(-0.2, -1.1)}) {
      const RMat f = frame_sphere(data, z, theta);
      CHECK(group_residual(f, data.form) < 1e-12);
      CHECK(max_abs(RMat(f - frame_sphere_polar(data, z, theta))) < 1e-10);
    }
  }
}

TEST_CASE("lightcone projection reproduces the representation orbit") {
  for (int m : {2, 3}) {
    const HomogeneousSphereData data = veronese_monodromy(m);
    const So3Triple rep = build_irreducible(m);
    for (const Cplx z :
         {Cplx(0.0, 0.0), Cplx(0.5, 0.0), Cplx(0.3, -0.8), Cplx(-1.4, 0.6)}) {
      const RVec y = lightcone_project(frame_sphere(data, z, 0.0));
      const RVec oracle = data.adapted_basis.transpose() * rep_orbit(rep, m, z);
      CHECK(max_abs(RMat(y - oracle)) < 1e-12);
      CHECK(std::abs(y.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("projected immersion is rotationally homogeneous and 2pi-periodic") {
  const HomogeneousSphereData data = veronese_monodromy(2);
  const std::vector<Cplx> grid = {Cplx(0.3, 0.1), Cplx(-0.6, 0.4),
                                  Cplx(1.1, -0.2)};
  CHECK(homogeneity_residual(data, 0.83, grid) < 1e-11);
  CHECK(homogeneity_residual(data, -2.4, grid) < 1e-11);
  CHECK(homogeneity_residual(data, 2.0 * kPi, grid) < 1e-11);
}

TEST_CASE("lightcone projection guards its chart") {
  const HomogeneousSphereData data = veronese_monodromy(1);
  RMat flipped = -RMat::Identity(4, 4);
  CHECK_THROWS_AS(lightcone_project(flipped), NumericalError);
  CHECK_THROWS_AS(lightcone_project(RMat::Identity(1, 1)), SchemaError);
}

TEST_CASE("commuting constant potential: structure and closed-form orbit") {
  const ConstantPotential pot = clifford_potential();
  CHECK(pot.commuting_residual() < 1e-15);
  CHECK(pot.A.residuals().max() < 1e-15);
  CHECK(pot.B.residuals().max() < 1e-15);

  const auto orbit = [](double u, double v) {
    RVec y(5);
    y << 0.5 * (std::cos(u) + std::cos(v)), std::sin(u) / std::sqrt(2.0),
        0.5 * (std::cos(u) - std::cos(v)), std::sin(v) / std::sqrt(2.0), 0.0;
    return y;
  };
  for (const auto& [u, v] : std::vector<std::pair<double, double>>{
           {0.0, 0.0}, {0.7, -0.3}, {2.5, 1.9}, {-1.2, 3.3}}) {
    const RVec y = lightcone_project(frame_plane(pot, u, v, 0.0));
    CHECK(max_abs(RMat(y - orbit(u, v))) < 1e-13);
  }

  // Double periodicity with periods (2pi, 2pi) at lambda = 1.
  const RVec base = lightcone_project(frame_plane(pot, 0.4, 1.1, 0.0));
  const RVec shift_u =
      lightcone_project(frame_plane(pot, 0.4 + 2.0 * kPi, 1.1, 0.0));
  const RVec shift_v =
      lightcone_project(frame_plane(pot, 0.4, 1.1 + 2.0 * kPi, 0.0));
  CHECK(max_abs(RMat(shift_u - base)) < 1e-12);
  CHECK(max_abs(RMat(shift_v - base)) < 1e-12);
}

TEST_CASE("two-parameter group law holds at every loop angle sampled") {
  const ConstantPotential pot = clifford_potential();
  for (const double theta : {0.0, 0.4, 1.3}) {
    const RMat lhs = frame_plane(pot, 0.7 + 0.2, -0.3 + 1.1, theta);
    const RMat rhs = frame_plane(pot, 0.7, -0.3, theta) *
                     frame_plane(pot, 0.2, 1.1, theta);
    CHECK(max_abs(RMat(lhs - rhs)) < 1e-12);
  }
}

TEST_CASE("non-commuting direction pair is rejected") {
  ConstantPotential bad = clifford_potential();
  // Couple e2 (head) to e4 (tail): this rotation does not commute with A.
  RVec b1 = RVec::Zero(6);
  b1(2) = 1.0;
  RVec b2 = RVec::Zero(6);
  b2(4) = 1.0;
  const RMat k = b2 * b1.transpose() - b1 * b2.transpose();
  bad.B = LaurentLoop(1, bad.A.form(), bad.A.split());
  bad.B.coeff(-1) = 0.5 * k.cast<Cplx>();
  bad.B.coeff(1) = 0.5 * k.cast<Cplx>();
  CHECK(bad.commuting_residual() > 0.1);
  CHECK_THROWS_AS(frame_plane(bad, 0.3, 0.4, 0.0), NumericalError);
}
