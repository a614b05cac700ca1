#pragma once

#include <vector>

#include "willmore/linalg.hpp"

namespace willmore {

// The rank-one solvable subalgebra of so(1,p) spanned by a grading element
// E and an abelian ideal N_1, ..., N_{p-1} with [E, N_i] = N_i.  All
// generators follow the two-column pattern
//   M(a, X) = [[0, a, X^T], [a, 0, -X^T], [X, X, 0]]
// with E = M(-1, 0) and N_i = M(0, e_i).
struct SolvableAlgebra {
  BilinearForm form;
  RMat E;
  std::vector<RMat> N;

  int dimension() const { return 1 + static_cast<int>(N.size()); }
  std::vector<RMat> basis() const;  // E first, then N_1, ..., N_{p-1}
};

// M(a, X) on the Lorentz space of dimension X.size() + 2.
RMat solvable_generator(double a, const RVec& x);

SolvableAlgebra build_solvable(int p);  // p >= 2

// Structural diagnosis of a list of matrices under a bilinear form.  The
// first basis element is treated as the grading candidate E and the rest as
// the candidate abelian ideal.
struct StructureReport {
  double membership = 0.0;  // max distance of a generator to the algebra
  double closure = 0.0;     // max distance of a bracket to the span
  double weight = 0.0;      // max || [E, N_i] - N_i ||
  double abelian = 0.0;     // max || [N_i, N_j] ||
  double nilpotent = 0.0;   // max || N_i^3 ||
  std::vector<int> derived_dims;  // dims of the derived series until it
                                  // stabilizes or vanishes
  bool solvable = false;          // derived series reaches zero
  int dimension = 0;              // rank of the span of the input
};

StructureReport verify_structure(const std::vector<RMat>& basis,
                                 const BilinearForm& form,
                                 double rank_tol = 1e-9);

// Residuals of the half-plane relation [B, D] = 2 D.  For dim >= 3 the
// nilpotent argument is also compared against the two-column pattern
// M(0, X) with X read off its first column; 2x2 inputs skip that check.
struct BracketCheck {
  double bracket_residual = 0.0;
  bool shape_checked = false;
  double shape_residual = 0.0;
};

BracketCheck halfplane_bracket_check(const RMat& b, const RMat& d);

// The 2x2 model of the same relation: [sigma3, nu] = 2 nu exactly.
RMat sigma3();  // [[1, 0], [0, -1]]
RMat nu();      // [[0, 1], [0, 0]]

}  // namespace willmore
