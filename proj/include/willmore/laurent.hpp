#pragma once

#include <vector>

#include "willmore/linalg.hpp"

namespace willmore {

// Two-block decomposition of an ambient space, head block first.  The loop
// twist and the reductive splitting are both defined relative to this.
struct BlockSplit {
  int head = 0;
  int tail = 0;

  int dim() const { return head + tail; }
};

// Zero out the off-diagonal blocks, keeping the (head,head) and (tail,tail)
// diagonal blocks.
Mat block_diagonal_part(const Mat& x, const BlockSplit& split);
// Zero out the diagonal blocks, keeping the two off-diagonal blocks.
Mat block_off_diagonal_part(const Mat& x, const BlockSplit& split);

// Finite Laurent polynomial A(lambda) = sum_{|k| <= degree} A_k lambda^k
// with matrix coefficients, carrying the ambient bilinear form and block
// split needed to state its structural constraints:
//   reality:    A_{-k} = conj(A_k)          (A real on |lambda| = 1)
//   twist:      A_k block-diagonal for even k, block-off-diagonal for odd k
//   membership: each A_k lies in the complexified algebra of the form
struct LoopResiduals {
  double reality = 0.0;
  double twist = 0.0;
  double membership = 0.0;

  double max() const;
};

class LaurentLoop {
 public:
  LaurentLoop() = default;
  LaurentLoop(int degree, BilinearForm form, BlockSplit split);

  int degree() const { return degree_; }
  int dim() const { return form_.dim; }
  const BilinearForm& form() const { return form_; }
  const BlockSplit& split() const { return split_; }

  // Coefficient of lambda^k; throws SchemaError outside |k| <= degree.
  Mat& coeff(int k);
  const Mat& coeff(int k) const;
  // Coefficient with zero fallback outside the window.
  Mat coeff_or_zero(int k) const;

  // Value at lambda = exp(i*theta).
  Mat eval(double theta) const;
  // Value at a unit-circle point, certified real.
  RMat eval_real(double theta, double tol = 1e-9) const;

  LoopResiduals residuals() const;

  // Coefficient-wise conjugate combined with k -> -k; equals the loop
  // lambda -> conj(A(conj(lambda)^-1)), the involution whose fixed points
  // are the real loops.
  LaurentLoop conjugated() const;

  // Degree-(d1+d2) bracket [A, B](lambda); the window grows additively.
  LaurentLoop bracket(const LaurentLoop& other) const;

  // Drop leading/trailing coefficients with max-norm <= tol.
  LaurentLoop trimmed(double tol = 0.0) const;

  LaurentLoop& operator+=(const LaurentLoop& other);
  LaurentLoop& operator-=(const LaurentLoop& other);
  LaurentLoop& operator*=(Cplx scale);

 private:
  void check_compatible(const LaurentLoop& other, const char* what) const;

  int degree_ = 0;
  BilinearForm form_;
  BlockSplit split_;
  std::vector<Mat> coeffs_;  // index k + degree_
};

LaurentLoop operator+(LaurentLoop a, const LaurentLoop& b);
LaurentLoop operator-(LaurentLoop a, const LaurentLoop& b);
LaurentLoop operator*(Cplx scale, LaurentLoop a);

// True when every coefficient outside |k| <= 1 vanishes to within tol, i.e.
// the loop has the lambda^{-1}, lambda^0, lambda^1 window of a connection
// built from a degree-one potential.
bool degree_window_check(const LaurentLoop& loop, double tol = 1e-10);

}  // namespace willmore
