#include "willmore/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace willmore {

RVec BilinearForm::diagonal() const {
  RVec d = RVec::Ones(dim);
  for (int i = 0; i < timelike; ++i) d(i) = -1.0;
  return d;
}

RMat BilinearForm::matrix() const { return diagonal().asDiagonal(); }

BilinearForm euclidean_form(int dim) { return BilinearForm{dim, 0}; }
BilinearForm lorentz_form(int dim) { return BilinearForm{dim, 1}; }

namespace {

void check_square(Eigen::Index rows, Eigen::Index cols, int dim,
                  const char* what) {
  if (rows != cols || rows != dim) {
    std::ostringstream msg;
    msg << what << ": matrix is " << rows << "x" << cols
        << " but the form has dimension " << dim;
    throw SchemaError(msg.str());
  }
}

}  // namespace

double membership_residual(const Mat& x, const BilinearForm& form) {
  check_square(x.rows(), x.cols(), form.dim, "membership_residual");
  const RMat g = form.matrix();
  return max_abs(Mat(x.transpose() * g + g * x));
}

double membership_residual(const RMat& x, const BilinearForm& form) {
  check_square(x.rows(), x.cols(), form.dim, "membership_residual");
  const RMat g = form.matrix();
  return max_abs(RMat(x.transpose() * g + g * x));
}

double group_residual(const RMat& f, const BilinearForm& form) {
  check_square(f.rows(), f.cols(), form.dim, "group_residual");
  const RMat g = form.matrix();
  return max_abs(RMat(f.transpose() * g * f - g));
}

RMat form_inverse(const RMat& f, const BilinearForm& form) {
  check_square(f.rows(), f.cols(), form.dim, "form_inverse");
  const RVec d = form.diagonal();
  return d.asDiagonal() * f.transpose() * d.asDiagonal();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
RMat commutator(const RMat& a, const RMat& b) { return a * b - b * a; }

RMat conjugate_by_frame(const RMat& frame, const RMat& x,
                        const BilinearForm& form) {
  return form_inverse(frame, form) * x * frame;
}

Mat conjugate_by_frame(const RMat& frame, const Mat& x,
                       const BilinearForm& form) {
  return form_inverse(frame, form) * x * frame;
}

namespace {

// Order-13 Pade numerator coefficients (denominator uses alternating signs).
constexpr double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

// Largest 1-norm for which the order-13 approximant meets unit roundoff
// without scaling.
constexpr double kPadeTheta13 = 5.371920351148152;

template <typename MatT>
MatT expm_impl(const MatT& x, double tol) {
  if (x.rows() != x.cols()) {
    throw SchemaError("expm: matrix must be square");
  }
  if (!(tol > 0.0)) {
    throw SchemaError("expm: tolerance must be positive");
  }
  const double norm1 = x.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 == 0.0) {
    // exp(0) = I holds exactly; callers rely on this at base points.
    return MatT::Identity(x.rows(), x.cols());
  }
  // Scaling-and-squaring amplifies roundoff roughly linearly in the norm;
  // refuse tolerances the input norm cannot support rather than silently
  // returning a less accurate result.
  const double attainable = 1e-15 * std::max(1.0, norm1);
  if (tol < attainable) {
    std::ostringstream msg;
    msg << "expm: requested tolerance " << tol
        << " is not attainable for input 1-norm " << norm1
        << " (attainable ~" << attainable << ")";
    throw NumericalError(msg.str());
  }

  int squarings = 0;
  if (norm1 > kPadeTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kPadeTheta13)));
  }
  const MatT a = x / std::pow(2.0, squarings);

  const Eigen::Index n = x.rows();
  const MatT ident = MatT::Identity(n, n);
  const MatT a2 = a * a;
  const MatT a4 = a2 * a2;
  const MatT a6 = a2 * a4;
  const MatT u =
      a * (a6 * (kPade13[13] * a6 + kPade13[11] * a4 + kPade13[9] * a2) +
           kPade13[7] * a6 + kPade13[5] * a4 + kPade13[3] * a2 +
           kPade13[1] * ident);
  const MatT v =
      a6 * (kPade13[12] * a6 + kPade13[10] * a4 + kPade13[8] * a2) +
      kPade13[6] * a6 + kPade13[4] * a4 + kPade13[2] * a2 + kPade13[0] * ident;

  MatT result = (v - u).lu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace

RMat expm(const RMat& x, double tol) { return expm_impl<RMat>(x, tol); }
Mat expm(const Mat& x, double tol) { return expm_impl<Mat>(x, tol); }

std::vector<double> skew_frequencies(const RMat& x) {
  if (x.rows() != x.cols()) {
    throw SchemaError("skew_frequencies: matrix must be square");
  }
  const double skewness = max_abs(RMat(x + x.transpose()));
  const double scale = std::max(1.0, max_abs(x));
  if (skewness > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "skew_frequencies: matrix is not skew-symmetric (residual "
        << skewness << ")";
    throw NumericalError(msg.str());
  }

  // The real Schur form of a skew matrix is block diagonal with 1x1 zero
  // blocks and 2x2 rotation generators [[0, w], [-w, 0]].
  Eigen::RealSchur<RMat> schur(x);
  if (schur.info() != Eigen::Success) {
    throw NumericalError("skew_frequencies: Schur factorization failed");
  }
  const RMat& t = schur.matrixT();
  const Eigen::Index n = x.rows();
  std::vector<double> freqs;
  Eigen::Index i = 0;
  while (i < n) {
    if (i + 1 < n && std::abs(t(i + 1, i)) > 1e-12 * scale) {
      const double w = std::sqrt(std::abs(t(i, i + 1) * t(i + 1, i)));
      freqs.push_back(w);
      i += 2;
    } else {
      freqs.push_back(0.0);
      i += 1;
    }
  }
  std::sort(freqs.begin(), freqs.end());
  return freqs;
}

std::map<int, int> skew_eigenstructure(const RMat& x,
                                         const BilinearForm& form,
                                         double lattice_tol) {
  check_square(x.rows(), x.cols(), form.dim, "skew_eigenstructure");
  if (!form.definite()) {
    throw SchemaError(
        "skew_eigenstructure: requires a definite form (rotation "
        "eigenstructure is only meaningful for compact generators)");
  }
  const double memb = membership_residual(x, form);
  const double scale = std::max(1.0, max_abs(x));
  if (memb > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "skew_eigenstructure: matrix is not skew (residual " << memb
        << ")";
    throw NumericalError(msg.str());
  }

  std::map<int, int> mult;
  int nonzero_pairs = 0;
  for (double w : skew_frequencies(x)) {
    const int k = static_cast<int>(std::lround(w));
    if (std::abs(w - k) > lattice_tol) {
      std::ostringstream msg;
      msg << "skew_eigenstructure: eigenvalue " << w
          << "i is off the integer lattice by " << std::abs(w - k)
          << " (tolerance " << lattice_tol << ")";
      throw NumericalError(msg.str());
    }
    if (k != 0) {
      // One entry per conjugate pair {+ik, -ik}.
      mult[k] += 1;
      nonzero_pairs += 1;
    }
  }
  // Everything not in a nonzero rotation pair is a zero eigenvalue.
  mult[0] = form.dim - 2 * nonzero_pairs;
  return mult;
}

double imag_norm(const Mat& x) {
  return x.size() == 0 ? 0.0 : x.imag().cwiseAbs().maxCoeff();
}

RMat real_part_checked(const Mat& x, double tol, const char* what) {
  const double r = imag_norm(x);
  if (r > tol) {
    std::ostringstream msg;
    msg << what << ": expression failed realness check (imaginary residual "
        << r << ", tolerance " << tol << ")";
    throw NumericalError(msg.str());
  }
  return x.real();
}

}  // namespace willmore
