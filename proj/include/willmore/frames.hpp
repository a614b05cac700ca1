#pragma once

#include <vector>

#include "willmore/laurent.hpp"
#include "willmore/linalg.hpp"

namespace willmore {

// Monodromy data of a rotationally homogeneous sphere immersion: two real
// twisted degree-1 loops A1, A2 and a constant rotation generator A3 spanning
// a rotation algebra at every unit loop parameter:
//   [A3, A2] = -A1,  [A3, A1] = A2,  [A1, A2] = A3.
struct HomogeneousSphereData {
  int m = 0;                 // equivariant degree (ambient sphere S^{2m})
  BilinearForm form;         // diag(-1, 1, ..., 1) on R^{2m+2}
  BlockSplit split;          // (4, 2m-2)
  LaurentLoop A1, A2;
  RMat A3;
  RMat adapted_basis;        // spatial orthogonal basis change used to build
  double weight = 0.0;       // sqrt(m(m+1)/2)
};

// Monodromy data whose base orbit is the degree-m equivariant sphere.
HomogeneousSphereData veronese_monodromy(int m);

struct MonodromyResiduals {
  double loop_structure = 0.0;    // reality/twist/membership of A1, A2
  double rotation_algebra = 0.0;  // the three loop bracket relations
  double a3_membership = 0.0;
  double a3_block_diagonal = 0.0; // A3 must have no off-diagonal block part
  double harmonicity = 0.0;       // [K1,P1] + [K2,P2] with K/P the block parts
  double basis_orthogonality = 0.0;
  bool degree_windows = true;     // both loops supported on |k| <= 1
  double max() const;
};

MonodromyResiduals monodromy_residuals(const HomogeneousSphereData& data);

// Frame of the associated family at z = u + iv and loop parameter
// lambda = exp(i * lambda_theta):
//   F(z, lambda) = expm((-2 arctan(r)/r) * (u A2(lambda) + v A1(lambda)))
// with arctan(r)/r continued by its Taylor series below r = 1e-4 so that
// F(0, lambda) = I exactly.
RMat frame_sphere(const HomogeneousSphereData& data, Cplx z,
                  double lambda_theta);

// The same frame in polar form at z = r e^{i theta_hat}:
//   e^{-theta_hat A3} expm(-2 arctan(r) A2(lambda)) e^{theta_hat A3}.
RMat frame_sphere_polar(const HomogeneousSphereData& data, Cplx z,
                        double lambda_theta);

// Project a form-preserving frame to the unit sphere through the lightlike
// vector v0 = e_time + e_1: with x = F v0, returns x_spatial / x_time.
// Throws NumericalError when x_time <= tol (projection leaves the chart).
RVec lightcone_project(const RMat& frame, double tol = 1e-9);

// max over the grid of || y(e^{i theta_hat} z) - P(exp(-theta_hat A3) x(z)) ||
// where y is the lightcone projection and P the projective normalization;
// near zero certifies rotational homogeneity of the projected immersion.
double homogeneity_residual(const HomogeneousSphereData& data,
                            double theta_hat, const std::vector<Cplx>& grid);

// A two-direction constant potential: frames are F(u,v) = expm(uA + vB),
// well-defined as a two-parameter group only when [A, B] = 0.
struct ConstantPotential {
  LaurentLoop A;
  LaurentLoop B;

  // max coefficient norm of the loop bracket [A, B]
  double commuting_residual() const;
};

// Commuting pair in so(4), embedded in so(1,5) with block split (4,2):
// A rotates span{(e1+e3)/sqrt(2), e2} and B(lambda) = ((lambda+1/lambda)/2) J
// rotates span{(e1-e3)/sqrt(2), e4}.  Projecting the frame orbit through the
// lightcone yields a flat torus, doubly periodic with periods (2*pi, 2*pi)
// at lambda = 1.
ConstantPotential clifford_potential();

// expm(u * A(theta) + v * B(theta)); throws NumericalError when the pair
// fails the commutation precondition at tol.
RMat frame_plane(const ConstantPotential& pot, double u, double v,
                 double lambda_theta, double tol = 1e-9);

}  // namespace willmore
