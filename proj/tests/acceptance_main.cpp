// Acceptance gate: one line per criterion, every tolerance pinned in code.
// Exit status 0 only when all eight criteria pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "willmore/frames.hpp"
#include "willmore/geometry.hpp"
#include "willmore/linalg.hpp"
#include "willmore/so3.hpp"
#include "willmore/solvable.hpp"
#include "willmore/spherical.hpp"
#include "willmore/wu.hpp"

namespace {

using namespace willmore;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

struct Criterion {
  std::string name;
  bool pass = true;
  double seconds = 0.0;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }

  template <typename T>
  void require_below(T value, T bound, const std::string& what) {
    if (!(value < bound)) {
      pass = false;
      std::ostringstream msg;
      msg << what << ": " << value << " !< " << bound;
      details.push_back(msg.str());
    }
  }
};

// 1. Irreducible blocks for l = 1..10: bracket relations < 1e-12, simple
//    rotation spectrum {ik : |k| <= l}, Casimir scalar -l(l+1) to 1e-10;
//    decompose inverts direct_sum on 50 random multisets.  Under 5 s.
Criterion criterion_representations() {
  Criterion c{"representation suite: l <= 10 + 50 random direct sums"};
  constexpr double kCommutationTol = 1e-12;
  constexpr double kCasimirTol = 1e-10;
  constexpr double kBudgetSeconds = 5.0;

  const auto start = Clock::now();
  for (int l = 1; l <= 10; ++l) {
    const So3Triple rep = build_irreducible(l);
    c.require_below(commutation_residual(rep), kCommutationTol,
                    "commutation residual, l=" + std::to_string(l));

    const auto spectrum = skew_eigenstructure(rep.r(3),
                                              euclidean_form(rep.dim()));
    bool simple = static_cast<int>(spectrum.size()) == l + 1;
    for (int k = 0; k <= l && simple; ++k) {
      simple = spectrum.count(k) == 1 && spectrum.at(k) == 1;
    }
    c.require(simple, "rotation spectrum of l=" + std::to_string(l) +
                          " is not {ik : |k| <= l} simple");

    const RMat expected =
        -static_cast<double>(l * (l + 1)) * RMat::Identity(rep.dim(), rep.dim());
    c.require_below(max_abs(RMat(casimir_matrix(rep) - expected)), kCasimirTol,
                    "Casimir scalar, l=" + std::to_string(l));
  }

  std::mt19937 rng(20260815u);
  std::uniform_int_distribution<int> count_dist(1, 5);
  std::uniform_int_distribution<int> spin_dist(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> spins;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) spins.push_back(spin_dist(rng));

    So3Triple rep = (spins[0] == 0) ? trivial_rep(1)
                                    : build_irreducible(spins[0]);
    for (size_t i = 1; i < spins.size(); ++i) {
      rep = direct_sum(rep, spins[i] == 0 ? trivial_rep(1)
                                          : build_irreducible(spins[i]));
    }
    std::vector<int> recovered = decompose(rep);
    std::sort(recovered.begin(), recovered.end());
    std::sort(spins.begin(), spins.end());
    if (recovered != spins) {
      std::ostringstream msg;
      msg << "round-trip failed on trial " << trial << " (size "
          << spins.size() << ")";
      c.require(false, msg.str());
    }
  }

  c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  c.require_below(c.seconds, kBudgetSeconds, "runtime (s)");
  return c;
}

// 2. Ambient irreducibility: true exactly for one trivial line plus one
//    spin-m block; exhaustive over summand multisets of total dim <= 12.
Criterion criterion_irreducibility() {
  Criterion c{"ambient irreducibility: exhaustive multisets, dim <= 12"};

  const auto build = [](const std::vector<int>& spins) {
    So3Triple rep = (spins[0] == 0) ? trivial_rep(1)
                                    : build_irreducible(spins[0]);
    for (size_t i = 1; i < spins.size(); ++i) {
      rep = direct_sum(rep, spins[i] == 0 ? trivial_rep(1)
                                          : build_irreducible(spins[i]));
    }
    return rep;
  };

  // The designated positive family and its minimal spoilers.
  for (int m = 1; m <= 4; ++m) {
    c.require(is_irreducible_ambient(build({0, m})),
              "trivial+spin-" + std::to_string(m) + " misclassified");
    c.require(!is_irreducible_ambient(build({0, 0, m})),
              "extra trivial not rejected, m=" + std::to_string(m));
    c.require(!is_irreducible_ambient(build({0, m, m})),
              "repeated summand not rejected, m=" + std::to_string(m));
  }

  // Exhaustive: every nonempty multiset of summands with total dim <= 12.
  std::vector<std::vector<int>> multisets;
  std::vector<int> current;
  const auto enumerate = [&](auto&& self, int min_spin, int dim_left) -> void {
    for (int s = min_spin; 2 * s + 1 <= dim_left; ++s) {
      current.push_back(s);
      multisets.push_back(current);
      self(self, s, dim_left - (2 * s + 1));
      current.pop_back();
    }
  };
  enumerate(enumerate, 0, 12);

  int checked = 0;
  for (const std::vector<int>& spins : multisets) {
    const bool expected =
        spins.size() == 2 && spins[0] == 0 && spins[1] >= 1;
    const bool got = is_irreducible_ambient(build(spins));
    ++checked;
    if (got != expected) {
      std::ostringstream msg;
      msg << "multiset {";
      for (int s : spins) msg << " " << s;
      msg << " } classified " << got << ", expected " << expected;
      c.require(false, msg.str());
    }
  }
  c.require(checked > 20, "enumeration unexpectedly small");
  return c;
}

// 3. Closed-surface geometry for m = 1,2,3 with the 1e-3 stencil:
//    conformality < 1e-5, minimality < 1e-3, curvature constant to 1e-3
//    around 2/(m(m+1)), total curvature 4pi +- 1e-2, Willmore energy within
//    0.2 of Area - 4pi.  Under 60 s per degree.
Criterion criterion_geometry() {
  Criterion c{"closed-surface geometry: degrees 1..3"};
  constexpr double kConformalTol = 1e-5;
  constexpr double kMinimalTol = 1e-3;
  constexpr double kCurvatureTol = 1e-3;
  constexpr double kTotalCurvatureTol = 1e-2;
  constexpr double kWillmoreTol = 0.2;
  constexpr double kBudgetSeconds = 60.0;

  for (int m = 1; m <= 3; ++m) {
    const auto start = Clock::now();
    const SurfaceSampler sampler = [m](Cplx z) {
      return veronese_point(m, z);
    };
    QuadratureOptions quad;  // stencil 1e-3, hemisphere charts, 256 x 128 nodes
    const SphereReport sphere = sphere_report(sampler, sampler, quad);
    const std::string tag = ", m=" + std::to_string(m);

    c.require_below(sphere.conformality, kConformalTol, "conformality" + tag);
    c.require_below(sphere.minimality, kMinimalTol, "minimality" + tag);
    const double spread = std::max(sphere.gauss.max - sphere.gauss.mean,
                                   sphere.gauss.mean - sphere.gauss.min);
    c.require_below(spread, kCurvatureTol, "curvature constancy" + tag);
    c.require_below(std::abs(sphere.gauss.mean - 2.0 / (m * (m + 1))),
                    kCurvatureTol, "curvature value" + tag);
    c.require_below(std::abs(sphere.gauss_bonnet - 4.0 * kPi),
                    kTotalCurvatureTol, "total curvature" + tag);
    c.require_below(std::abs(sphere.willmore - (sphere.area - 4.0 * kPi)),
                    kWillmoreTol, "Willmore vs area" + tag);

    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    c.seconds += secs;
    c.require_below(secs, kBudgetSeconds, "runtime (s)" + tag);
  }
  return c;
}

// 4. Antipodal parity: y(-1/conj(z)) = (-1)^m y(z) below 1e-10 on 1000
//    random samples for each m = 1..4.
Criterion criterion_antipodal() {
  Criterion c{"antipodal parity: 1000 samples, degrees 1..4"};
  constexpr double kParityTol = 1e-10;
  for (int m = 1; m <= 4; ++m) {
    c.require_below(antipodal_check(m, 1000, 20260815u), kParityTol,
                    "parity residual, m=" + std::to_string(m));
  }
  return c;
}

// 5. Frames from the degree-m data: exponential and polar forms agree to
//    1e-10 on both half-planes at 5 loop angles, the base frame is exactly
//    the identity, and every frame preserves the form to 1e-9.
Criterion criterion_frames() {
  Criterion c{"frame consistency: polar vs exponential, form preservation"};
  constexpr double kPolarTol = 1e-10;
  constexpr double kGroupTol = 1e-9;

  const std::vector<Cplx> upper = {Cplx(0.3, 0.4), Cplx(-0.7, 0.9),
                                   Cplx(1.5, 0.2)};
  const std::vector<Cplx> lower = {Cplx(0.5, -0.6), Cplx(-1.1, -0.3),
                                   Cplx(0.2, -1.4)};

  for (int m = 1; m <= 3; ++m) {
    const HomogeneousSphereData data = veronese_monodromy(m);
    const std::string tag = ", m=" + std::to_string(m);
    for (int j = 0; j < 5; ++j) {
      const double theta = 2.0 * kPi * j / 5.0;
      c.require(max_abs(RMat(frame_sphere(data, Cplx(0, 0), theta) -
                             RMat::Identity(data.form.dim, data.form.dim))) ==
                    0.0,
                "base frame not exactly the identity" + tag);
      for (const std::vector<Cplx>& half : {upper, lower}) {
        for (const Cplx& z : half) {
          const RMat f = frame_sphere(data, z, theta);
          c.require_below(max_abs(RMat(f - frame_sphere_polar(data, z, theta))),
                          kPolarTol, "polar agreement" + tag);
          c.require_below(group_residual(f, data.form), kGroupTol,
                          "form preservation" + tag);
        }
      }
    }
  }
  return c;
}

// 6. Coefficient pipeline on the degree-m data: || L1 + i H1 || < 1e-9, the
//    four bracket identities < 1e-9, the lambda^1 coefficient of the
//    holomorphic combination < 1e-10, and the normalized potential passes
//    the minimality certificate.
Criterion criterion_wu() {
  Criterion c{"coefficient pipeline: potential, brackets, certificate"};
  constexpr double kWillmoreTol = 1e-9;
  constexpr double kBracketTol = 1e-9;
  constexpr double kHolTol = 1e-10;

  for (int m = 1; m <= 4; ++m) {
    const HomogeneousSphereData data = veronese_monodromy(m);
    const std::string tag = ", m=" + std::to_string(m);
    const WuAnalysis analysis = analyze_monodromy(data.A1, data.A2, data.A3);
    c.require_below(analysis.coeffs.willmore_residual(), kWillmoreTol,
                    "harmonicity residual" + tag);
    for (size_t i = 0; i < analysis.commutation.size(); ++i) {
      c.require_below(analysis.commutation[i], kBracketTol,
                      "bracket identity " + std::to_string(i) + tag);
    }
    c.require_below(max_abs(hol_mc(data.A1, data.A2).coeff(1)), kHolTol,
                    "lambda^1 coefficient" + tag);
    const LorentzNormalization normalized = lorentz_normalize(analysis);
    c.require(minimality_certificate(normalized.data),
              "minimality certificate failed" + tag);
  }
  return c;
}

// 7. Constant commuting potential: the plane frames obey the two-parameter
//    group law to 1e-9, the projected orbit closes after the (2pi, 2pi)
//    lattice periods to 1e-9, and a non-commuting pair is rejected.
Criterion criterion_constant_potential() {
  Criterion c{"constant potential: group law, periodicity, rejection"};
  constexpr double kGroupLawTol = 1e-9;
  constexpr double kPeriodTol = 1e-9;

  const ConstantPotential pot = clifford_potential();
  const std::vector<std::pair<double, double>> pairs = {
      {0.7, -0.3}, {0.2, 1.1}, {-1.4, 2.5}};
  for (const double theta : {0.0, 0.8, 2.1}) {
    for (size_t i = 0; i < pairs.size(); ++i) {
      for (size_t j = 0; j < pairs.size(); ++j) {
        const auto& [u1, v1] = pairs[i];
        const auto& [u2, v2] = pairs[j];
        const RMat lhs = frame_plane(pot, u1 + u2, v1 + v2, theta);
        const RMat rhs =
            frame_plane(pot, u1, v1, theta) * frame_plane(pot, u2, v2, theta);
        c.require_below(max_abs(RMat(lhs - rhs)), kGroupLawTol,
                        "group law at theta=" + std::to_string(theta));
      }
    }
  }

  for (const auto& [u, v] : pairs) {
    const RVec base = lightcone_project(frame_plane(pot, u, v, 0.0));
    const RVec du = lightcone_project(frame_plane(pot, u + 2.0 * kPi, v, 0.0));
    const RVec dv = lightcone_project(frame_plane(pot, u, v + 2.0 * kPi, 0.0));
    c.require_below(max_abs(RMat(du - base)), kPeriodTol, "period in u");
    c.require_below(max_abs(RMat(dv - base)), kPeriodTol, "period in v");
  }

  ConstantPotential bad = clifford_potential();
  RVec b1 = RVec::Zero(6);
  b1(2) = 1.0;
  RVec b2 = RVec::Zero(6);
  b2(4) = 1.0;
  const RMat k = b2 * b1.transpose() - b1 * b2.transpose();
  bad.B = LaurentLoop(1, bad.A.form(), bad.A.split());
  bad.B.coeff(-1) = 0.5 * k.cast<Cplx>();
  bad.B.coeff(1) = 0.5 * k.cast<Cplx>();
  bool rejected = false;
  try {
    frame_plane(bad, 0.3, 0.4, 0.0);
  } catch (const NumericalError&) {
    rejected = true;
  }
  c.require(rejected, "non-commuting pair was not rejected");
  return c;
}

// 8. Graded solvable family: verify_structure residuals < 1e-12 and a
//    vanishing derived series for p = 2..10; the 2x2 model closes [B,D]=2D
//    exactly; the rotation algebra negative control fails the graded
//    closure requirements (nonzero weight and abelian residuals, derived
//    series never reaches zero).
Criterion criterion_solvable() {
  Criterion c{"solvable family: p <= 10, 2x2 model, rotation control"};
  constexpr double kResidualTol = 1e-12;

  for (int p = 2; p <= 10; ++p) {
    const SolvableAlgebra alg = build_solvable(p);
    const StructureReport rep = verify_structure(alg.basis(), alg.form);
    const std::string tag = ", p=" + std::to_string(p);
    c.require_below(rep.membership, kResidualTol, "membership" + tag);
    c.require_below(rep.closure, kResidualTol, "closure" + tag);
    c.require_below(rep.weight, kResidualTol, "weight" + tag);
    c.require_below(rep.abelian, kResidualTol, "abelian" + tag);
    c.require_below(rep.nilpotent, kResidualTol, "nilpotent" + tag);
    c.require(rep.solvable, "derived series does not vanish" + tag);
  }

  const BracketCheck model = halfplane_bracket_check(sigma3(), nu());
  c.require(model.bracket_residual == 0.0,
            "2x2 model bracket is not exactly zero");

  const So3Triple rot = build_irreducible(1);
  const StructureReport control = verify_structure(
      {rot.r(1), rot.r(2), rot.r(3)}, euclidean_form(3));
  c.require(control.weight > 0.1 && control.abelian > 0.1,
            "rotation control unexpectedly satisfies the graded relations");
  c.require(!control.solvable,
            "rotation control unexpectedly reported solvable");
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion (*)()> criteria = {
      criterion_representations, criterion_irreducibility, criterion_geometry,
      criterion_antipodal,       criterion_frames,         criterion_wu,
      criterion_constant_potential, criterion_solvable};

  bool all_pass = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Criterion c = criteria[i]();
    if (c.seconds == 0.0) {
      c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    }
    all_pass = all_pass && c.pass;
    std::printf("[%zu/8] %-62s %s (%.2f s)\n", i + 1, c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.seconds);
    for (const std::string& d : c.details) {
      std::printf("      - %s\n", d.c_str());
    }
  }
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
