#pragma once

#include <complex>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

namespace willmore {

using Cplx = std::complex<double>;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Raised by operations whose numerical contract cannot be met (spectra off
// the expected lattice, requested tolerance below what the input norm
// permits, loss of realness, ...).  Callers that map failures to process
// exit codes catch this type.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on malformed structured input (bad dimensions, bad JSON shape,
// inconsistent metadata).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Diagonal bilinear form diag(-1,...,-1,+1,...,+1) with `timelike` leading
// -1 entries on an ambient space of dimension `dim`.  timelike == 0 gives
// the standard inner product.
struct BilinearForm {
  int dim = 0;
  int timelike = 0;

  bool definite() const { return timelike == 0; }
  RVec diagonal() const;
  RMat matrix() const;
};

BilinearForm euclidean_form(int dim);
BilinearForm lorentz_form(int dim);  // one leading timelike direction

// Infinity-norm of X^T G + G X; zero iff X is in the (complexified) matrix
// algebra preserving the form.
double membership_residual(const Mat& x, const BilinearForm& form);
double membership_residual(const RMat& x, const BilinearForm& form);

// Infinity-norm of F^T G F - G; zero iff F is in the matrix group
// preserving the form.
double group_residual(const RMat& f, const BilinearForm& form);

// Inverse of a form-preserving matrix computed as G^-1 F^T G (exact for
// group elements, no factorization).
RMat form_inverse(const RMat& f, const BilinearForm& form);

Mat commutator(const Mat& a, const Mat& b);
RMat commutator(const RMat& a, const RMat& b);

// Change of basis F^-1 X F by a form-preserving frame F.
RMat conjugate_by_frame(const RMat& frame, const RMat& x,
                        const BilinearForm& form);
Mat conjugate_by_frame(const RMat& frame, const Mat& x,
                       const BilinearForm& form);

// Matrix exponential: order-13 Pade approximant with scaling and squaring.
// Deterministic (fixed approximant order, fixed evaluation order).  Throws
// NumericalError when `tol` is below what the input norm allows.
RMat expm(const RMat& x, double tol = 1e-13);
Mat expm(const Mat& x, double tol = 1e-13);

// Eigenvalue multiplicities of a real matrix that is skew with respect to a
// definite form.  The spectrum must sit on the imaginary integer lattice
// i*Z within lattice_tol; the returned map sends k >= 0 to the multiplicity
// of eigenvalue i*k (so map[0] is the zero multiplicity and map[k] counts
// the +ik eigenvalues; -ik pairs match by realness).  Throws NumericalError
// if an eigenvalue rounds poorly.
std::map<int, int> skew_eigenstructure(const RMat& x,
                                         const BilinearForm& form,
                                         double lattice_tol = 1e-8);

// Unrounded nonnegative imaginary parts of the spectrum of a real skew
// matrix, sorted ascending (each positive value listed once per conjugate
// pair, zeros listed once each).
std::vector<double> skew_frequencies(const RMat& x);

inline double max_abs(const Mat& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}
inline double max_abs(const RMat& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

// Largest imaginary part in absolute value; used to certify that a complex
// expression is real before taking real parts.
double imag_norm(const Mat& x);

// Real part, throwing NumericalError when the imaginary part exceeds tol.
RMat real_part_checked(const Mat& x, double tol, const char* what);

}  // namespace willmore
