#pragma once

#include <array>
#include <vector>

#include "willmore/linalg.hpp"

namespace willmore {

// A triple of real skew matrices (rho_1, rho_2, rho_3) intended to satisfy
//   [rho_3, rho_2] = -rho_1,  [rho_3, rho_1] = rho_2,  [rho_1, rho_2] = rho_3.
struct So3Triple {
  std::array<RMat, 3> rho;

  int dim() const { return static_cast<int>(rho[0].rows()); }
  const RMat& r(int a) const;  // a in {1,2,3}
};

// Real irreducible representation of dimension 2l+1 (l >= 1), built from the
// complex ladder operators and realified in the basis
// (s_l, c_l, ..., s_1, c_1, y_0): for each frequency k the plane (s_k, c_k)
// rotates with speed k under rho_3, and y_0 spans the rho_3-kernel.
So3Triple build_irreducible(int l);

// dim-dimensional zero representation.
So3Triple trivial_rep(int dim = 1);

So3Triple direct_sum(const So3Triple& a, const So3Triple& b);

// Max-norm defect of the three commutation relations.
double commutation_residual(const So3Triple& t);

// rho_1^2 + rho_2^2 + rho_3^2 (equals -l(l+1) I on an irreducible block).
RMat casimir_matrix(const So3Triple& t);

// Multiset of spin levels (descending, trivial summands as 0) recovered from
// the rotation-speed multiplicities of rho_3.  Throws NumericalError when
// the multiplicities are inconsistent with any sum of irreducibles or when
// the commutation relations fail beyond pre_tol.
std::vector<int> decompose(const So3Triple& t, double lattice_tol = 1e-8,
                           double pre_tol = 1e-9);

// Number of invariant vectors, computed as the kernel dimension of the
// Casimir matrix (eigenvalues below 0.5 in magnitude; the nonzero Casimir
// eigenvalues are -l(l+1) <= -2).
int invariant_vector_count(const So3Triple& t);

// True iff the representation is a single trivial direction plus one
// irreducible summand, i.e. the zero rotation speed of rho_3 has
// multiplicity exactly two and exactly one of those directions is invariant.
bool is_irreducible_ambient(const So3Triple& t, double lattice_tol = 1e-8);

// Point on the Riemann sphere.
struct MobiusPoint {
  Cplx value{0.0, 0.0};
  bool infinite = false;
};

// One-parameter rotation subgroups of the unit quaternions as 2x2 special
// unitary matrices: axis a in {1,2,3}, angle t, in closed form.
Mat su2_rotation(int axis, double t);

// Infinitesimal generators T_a = su2_rotation'(a, 0); exp(t T_a) equals
// su2_rotation(a, t).
Mat su2_generator(int axis);

// Fractional-linear action of su2_rotation(axis, t) on the extended plane.
MobiusPoint mobius_act(int axis, double t, const MobiusPoint& z);
MobiusPoint mobius_act(const Mat& g, const MobiusPoint& z);

}  // namespace willmore
