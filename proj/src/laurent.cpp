#include "willmore/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace willmore {

namespace {

void check_split(const Mat& x, const BlockSplit& split, const char* what) {
  if (x.rows() != x.cols() || x.rows() != split.dim()) {
    std::ostringstream msg;
    msg << what << ": matrix is " << x.rows() << "x" << x.cols()
        << " but the split is (" << split.head << "," << split.tail << ")";
    throw SchemaError(msg.str());
  }
}

}  // namespace

Mat block_diagonal_part(const Mat& x, const BlockSplit& split) {
  check_split(x, split, "block_diagonal_part");
  Mat out = Mat::Zero(x.rows(), x.cols());
  out.topLeftCorner(split.head, split.head) =
      x.topLeftCorner(split.head, split.head);
  out.bottomRightCorner(split.tail, split.tail) =
      x.bottomRightCorner(split.tail, split.tail);
  return out;
}

Mat block_off_diagonal_part(const Mat& x, const BlockSplit& split) {
  check_split(x, split, "block_off_diagonal_part");
  Mat out = Mat::Zero(x.rows(), x.cols());
  out.topRightCorner(split.head, split.tail) =
      x.topRightCorner(split.head, split.tail);
  out.bottomLeftCorner(split.tail, split.head) =
      x.bottomLeftCorner(split.tail, split.head);
  return out;
}

double LoopResiduals::max() const {
  return std::max(reality, std::max(twist, membership));
}

LaurentLoop::LaurentLoop(int degree, BilinearForm form, BlockSplit split)
    : degree_(degree), form_(form), split_(split) {
  if (degree < 0) throw SchemaError("LaurentLoop: degree must be >= 0");
  if (split.dim() != form.dim) {
    throw SchemaError("LaurentLoop: split and form dimensions disagree");
  }
  coeffs_.assign(2 * degree + 1, Mat::Zero(form.dim, form.dim));
}

Mat& LaurentLoop::coeff(int k) {
  if (std::abs(k) > degree_) {
    throw SchemaError("LaurentLoop::coeff: index outside the window");
  }
  return coeffs_[static_cast<size_t>(k + degree_)];
}

const Mat& LaurentLoop::coeff(int k) const {
  if (std::abs(k) > degree_) {
    throw SchemaError("LaurentLoop::coeff: index outside the window");
  }
  return coeffs_[static_cast<size_t>(k + degree_)];
}

Mat LaurentLoop::coeff_or_zero(int k) const {
  if (std::abs(k) > degree_) return Mat::Zero(dim(), dim());
  return coeff(k);
}

Mat LaurentLoop::eval(double theta) const {
  Mat out = Mat::Zero(dim(), dim());
  for (int k = -degree_; k <= degree_; ++k) {
    out += coeff(k) * std::exp(Cplx(0.0, k * theta));
  }
  return out;
}

RMat LaurentLoop::eval_real(double theta, double tol) const {
  return real_part_checked(eval(theta), tol, "LaurentLoop::eval_real");
}

LoopResiduals LaurentLoop::residuals() const {
  LoopResiduals r;
  for (int k = 0; k <= degree_; ++k) {
    r.reality =
        std::max(r.reality, max_abs(Mat(coeff(-k) - coeff(k).conjugate())));
  }
  for (int k = -degree_; k <= degree_; ++k) {
    const Mat wrong_parity = (k % 2 == 0)
                                 ? block_off_diagonal_part(coeff(k), split_)
                                 : block_diagonal_part(coeff(k), split_);
    r.twist = std::max(r.twist, max_abs(wrong_parity));
    r.membership =
        std::max(r.membership, membership_residual(coeff(k), form_));
  }
  return r;
}

LaurentLoop LaurentLoop::conjugated() const {
  LaurentLoop out(degree_, form_, split_);
  for (int k = -degree_; k <= degree_; ++k) {
    out.coeff(k) = coeff(-k).conjugate();
  }
  return out;
}

void LaurentLoop::check_compatible(const LaurentLoop& other,
                                   const char* what) const {
  if (other.dim() != dim() || other.form_.timelike != form_.timelike ||
      other.split_.head != split_.head) {
    std::ostringstream msg;
    msg << what << ": loops have incompatible form or split";
    throw SchemaError(msg.str());
  }
}

LaurentLoop LaurentLoop::bracket(const LaurentLoop& other) const {
  check_compatible(other, "LaurentLoop::bracket");
  LaurentLoop out(degree_ + other.degree_, form_, split_);
  for (int p = -degree_; p <= degree_; ++p) {
    for (int q = -other.degree_; q <= other.degree_; ++q) {
      out.coeff(p + q) += commutator(coeff(p), other.coeff(q));
    }
  }
  return out;
}

LaurentLoop LaurentLoop::trimmed(double tol) const {
  int d = degree_;
  while (d > 0 && max_abs(coeff(d)) <= tol && max_abs(coeff(-d)) <= tol) {
    --d;
  }
  LaurentLoop out(d, form_, split_);
  for (int k = -d; k <= d; ++k) out.coeff(k) = coeff(k);
  return out;
}

LaurentLoop& LaurentLoop::operator+=(const LaurentLoop& other) {
  check_compatible(other, "LaurentLoop::operator+=");
  if (other.degree_ > degree_) {
    LaurentLoop grown(other.degree_, form_, split_);
    for (int k = -degree_; k <= degree_; ++k) grown.coeff(k) = coeff(k);
    *this = grown;
  }
  for (int k = -other.degree_; k <= other.degree_; ++k) {
    coeff(k) += other.coeff(k);
  }
  return *this;
}

LaurentLoop& LaurentLoop::operator-=(const LaurentLoop& other) {
  LaurentLoop neg = other;
  neg *= Cplx(-1.0, 0.0);
  return *this += neg;
}

LaurentLoop& LaurentLoop::operator*=(Cplx scale) {
  for (Mat& c : coeffs_) c *= scale;
  return *this;
}

LaurentLoop operator+(LaurentLoop a, const LaurentLoop& b) { return a += b; }
LaurentLoop operator-(LaurentLoop a, const LaurentLoop& b) { return a -= b; }
LaurentLoop operator*(Cplx scale, LaurentLoop a) {
  a *= scale;
  return a;
}

bool degree_window_check(const LaurentLoop& loop, double tol) {
  for (int k = 2; k <= loop.degree(); ++k) {
    if (max_abs(loop.coeff(k)) > tol) return false;
    if (max_abs(loop.coeff(-k)) > tol) return false;
  }
  return true;
}

}  // namespace willmore
