#pragma once

#include <array>
#include <limits>
#include <vector>

#include "willmore/laurent.hpp"
#include "willmore/linalg.hpp"

namespace willmore {

// Laurent coefficients of monodromy loops over a (4, n) split:
//   A1(lambda) = lambda^-1 H1 + H0 + lambda conj(H1)
//   A2(lambda) = lambda^-1 L1 + L0 + lambda conj(L1)
// with H0, L0 real block-diagonal and H1, L1 block-off-diagonal.
struct CoefficientSplit {
  BilinearForm form;
  BlockSplit split;
  Mat H1, L1;   // lambda^-1 coefficients
  RMat H0, L0;  // constant coefficients

  // || L1 + i H1 ||_max: zero exactly when the lambda^1 coefficient of the
  // normalized holomorphic connection vanishes, the conformal-harmonicity
  // constraint on the pair.
  double willmore_residual() const;

  LaurentLoop loop_A1() const;
  LaurentLoop loop_A2() const;
};

// Degree-one normalized potential xi(z) dz with
//   xi(z) = expm(z beta0) beta1 expm(-z beta0),
// packaged by its two generating coefficients.
struct NormalizedPotential {
  Mat beta0;  // -L0 + i H0
  Mat beta1;  // -L1 + i H1
};

// The combination -A2 + i A1 whose coefficients generate the normalized
// potential: coeff(-1) = beta1, coeff(0) = beta0, and the lambda^1
// coefficient has norm || L1 + i H1 ||.
LaurentLoop hol_mc(const LaurentLoop& A1, const LaurentLoop& A2);

// Split the loops into coefficients and form the normalized potential.
// Checks loop structure (reality, twist, membership, degree-1 window) at
// structure_tol and throws NumericalError past it; willmore_tol bounds the
// willmore_residual (default: unchecked, callers report it instead).
std::pair<CoefficientSplit, NormalizedPotential> split_and_potential(
    const LaurentLoop& A1, const LaurentLoop& A2,
    double willmore_tol = std::numeric_limits<double>::infinity(),
    double structure_tol = 1e-9);

Mat eval_xi(const NormalizedPotential& pot, Cplx z);

// Residuals of the four bracket identities satisfied by the coefficients of
// a rotationally homogeneous monodromy with rotation generator A3:
//   [0] ad(A3) acts as -i on L1 (first and second order),
//   [1] ad(A3) acts as -i on beta0 = -L0 + i H0,
//   [2] [H0, L0] + 2i [L1, conj(L1)] = A3,
//   [3] [conj(L1), beta0] = 0.
std::array<double, 4> commutation_residuals(const CoefficientSplit& coeffs,
                                            const RMat& A3);

// Canonical form of the rotation generator: A3 is conjugated by a
// block-diagonal spatial orthogonal frame to
//   diag(0_2, S, 0_2 n0 times, S n1-1 times, 2S n2 times, ...),
// where S = [[0,1],[-1,0]] and the multiplicity vector counts rotation
// planes of each integer speed (mult[1] includes the mandatory head plane).
struct CanonicalA3 {
  RMat conjugator;         // form-preserving; canonical = F^-1 A3 F
  RMat canonical;          // exact integer entries
  std::vector<int> mult;   // mult[j] = n_j, j = 0 .. max speed
  double residual = 0.0;   // achieved distance to the exact canonical form
};

CanonicalA3 canonicalize_A3(const RMat& A3, const BilinearForm& form,
                            const BlockSplit& split,
                            double lattice_tol = 1e-8);

// Structured entries of the potential coefficients in the canonical basis.
// The tail columns are grouped by rotation speed: width 2*n0 for speed 0,
// 2*(n1 - 1) for speed 1 (head plane excluded), 2*n_j for j >= 2.
//
// beta1's head-to-tail block B1 = beta1[0:4, 4:] is confined to
//   rows (0,1): 2 a1_k * Q1 on the speed-1 group, zero elsewhere;
//   rows (2,3): (2 b_k e0, 2 bhat_k e0) on the speed-0 group,
//               2 c1_k * Q2 on the speed-2 group, zero elsewhere;
// the recorded scalars a1, b, bhat, c1 are the couplings of beta1 / 2 (the
// lambda^{-1} monodromy coefficient with its sign flipped), which is the
// normalization in which the |c|^2 - |a|^2 balance below closes.
// beta0's head block holds [[a, -i a], [c, -i c]] in rows (0,1) x cols (2,3)
// and vanishes on the two diagonal 2x2 head cells; beta0's tail block links
// only adjacent speed groups, each 2x2 cell proportional to Q2.
struct BlockData {
  std::vector<int> mult;
  Cplx a{0.0, 0.0};
  Cplx c{0.0, 0.0};
  std::vector<Cplx> a1;    // speed-1 couplings of beta1
  std::vector<Cplx> b;     // speed-0 couplings of beta1
  std::vector<Cplx> bhat;
  std::vector<Cplx> c1;    // speed-2 couplings of beta1
  std::vector<Mat> q;      // q[t](k,l): adjacency coefficients of beta0
  std::vector<int> q_from; // q[t] couples speed q_from[t] to q_from[t] + 1
  Mat B1;                  // beta1 head-to-tail block (4 x n)
  double pattern_residual = 0.0;  // distance to the structured form above
};

// The constant 2x2 patterns and the isotropic column direction.
Mat pattern_q1();   // [[1, -i], [-1, i]]
Mat pattern_q2();   // [[1, -i], [i, 1]]
Vec pattern_e0();   // (1, -i)

BlockData extract_block_data(const CoefficientSplit& coeffs,
                             const CanonicalA3& canon);

// || B1^T diag(-1,1,1,1) B1 ||_max: zero when the columns of B1 span an
// isotropic subspace for the head form.
double isotropy_residual(const BlockData& blocks);

// Everything derived from one monodromy triple, in the canonical basis.
struct WuAnalysis {
  CoefficientSplit coeffs;        // conjugated into the canonical basis
  NormalizedPotential potential;
  CanonicalA3 canon;
  BlockData blocks;
  std::array<double, 4> commutation{};
  double isotropy = 0.0;
};

WuAnalysis analyze_monodromy(
    const LaurentLoop& A1, const LaurentLoop& A2, const RMat& A3,
    double willmore_tol = std::numeric_limits<double>::infinity(),
    double lattice_tol = 1e-8);

// |c|^2 - |a|^2 - 1 + 4 sum_k (|b_k|^2 + |bhat_k|^2) - 8 sum_k |c1_k|^2,
// in absolute value: the scalar balance relating the head couplings of
// beta0 to the speed-0 and speed-2 couplings of beta1.
double scalar_identity_residual(const BlockData& blocks);

struct LorentzNormalization {
  double t = 0.0;            // boost parameter applied in the (e0, y0) plane
  WuAnalysis data;           // re-extracted analysis after the boost
  double identity_residual;  // scalar balance, invariant under the boost
};

// Apply the boost T_t = diag([[cosh t, sinh t],[sinh t, cosh t]], I) with
// t = atanh(-Re(a conj(c)) / |c|^2), making the normalized a vanish.
// Requires |c| > |a| and a/c real (up to 1e-9); throws NumericalError
// otherwise.  Idempotent: normalizing a normalized analysis gives t = 0.
LorentzNormalization lorentz_normalize(const WuAnalysis& analysis);

// True when beta0, beta1, and sample values of xi all have first row and
// first column below tol: the potential then takes values in the compact
// subalgebra fixing the time direction, certifying a minimal surface in the
// round sphere.
bool minimality_certificate(const WuAnalysis& analysis, double tol = 1e-9);

}  // namespace willmore
