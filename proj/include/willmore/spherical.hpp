#pragma once

#include <Eigen/Dense>

#include "willmore/linalg.hpp"

namespace willmore {

// Values of the 2l+1 orthonormal real degree-l spherical harmonics at a unit
// vector p, ordered by descending rotation speed about the third axis:
//   (s_l, c_l, s_{l-1}, c_{l-1}, ..., s_1, c_1, z0)
// where (s_k, c_k) is the speed-k pair and z0 is the axis-invariant entry.
// Normalized so the sum of squares is (2l+1)/(4*pi) everywhere.
RVec real_spherical_harmonics(int l, const Eigen::Vector3d& p);

// Sum-of-squares constant (2l+1)/(4*pi) of the orthonormal degree-l family.
double harmonics_norm_constant(int l);

// Inverse stereographic projection sending 0 to the north pole (0,0,1) and
// infinity to the south pole; conformal chart of S^2.
Eigen::Vector3d stereographic_point(Cplx z);

// Unit-norm equivariant immersion S^2 -> S^{2m}: degree-m harmonics evaluated
// at the stereographic point, scaled to unit norm.
RVec veronese_point(int m, Cplx z);

}  // namespace willmore
