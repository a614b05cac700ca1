#include "willmore/wu.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace willmore {

namespace {

const Cplx kI(0.0, 1.0);

// Least-squares coefficient of `block` along `pattern`; folds the distance
// between block and its projection into `residual`.
Cplx fit_scalar(const Mat& pattern, const Mat& block, double& residual) {
  const double denom = pattern.squaredNorm();
  const Cplx s = (pattern.conjugate().cwiseProduct(block)).sum() / denom;
  residual = std::max(residual, max_abs(Mat(block - s * pattern)));
  return s;
}

struct TailScan {
  std::vector<int> zero_columns;
  struct Pair {
    int speed;
    int lead;
    bool oriented;  // true when the block is +speed*S already
  };
  std::vector<Pair> pairs;
};

// Walk a (numerically) skew tail block, splitting it into 2x2 rotation
// blocks and zero columns.  Returns nothing when a rotation speed rounds
// poorly to the integer lattice.
std::optional<TailScan> scan_tail(const RMat& t, double lattice_tol) {
  TailScan scan;
  const int n = static_cast<int>(t.rows());
  int i = 0;
  while (i < n) {
    if (i + 1 < n && std::abs(t(i + 1, i)) > 0.5) {
      const double w = std::sqrt(std::abs(t(i, i + 1) * t(i + 1, i)));
      const int k = static_cast<int>(std::lround(w));
      if (k < 1 || std::abs(w - k) > lattice_tol) return std::nullopt;
      scan.pairs.push_back({k, i, t(i, i + 1) > 0.0});
      i += 2;
    } else {
      scan.zero_columns.push_back(i);
      i += 1;
    }
  }
  return scan;
}

std::vector<int> multiplicities_from(const TailScan& scan) {
  int jmax = 1;
  for (const auto& p : scan.pairs) jmax = std::max(jmax, p.speed);
  std::vector<int> mult(static_cast<size_t>(jmax) + 1, 0);
  mult[0] = static_cast<int>(scan.zero_columns.size()) / 2;
  mult[1] = 1;  // the mandatory head plane
  for (const auto& p : scan.pairs) mult[static_cast<size_t>(p.speed)] += 1;
  return mult;
}

RMat build_canonical(const std::vector<int>& mult, int dim) {
  RMat out = RMat::Zero(dim, dim);
  out(2, 3) = 1.0;
  out(3, 2) = -1.0;
  int off = 4 + 2 * mult[0];
  for (size_t j = 1; j < mult.size(); ++j) {
    const int blocks = (j == 1) ? mult[j] - 1 : mult[j];
    for (int b = 0; b < blocks; ++b) {
      out(off, off + 1) = static_cast<double>(j);
      out(off + 1, off) = -static_cast<double>(j);
      off += 2;
    }
  }
  return out;
}

// True when the scan already lists the canonical layout: zero columns first,
// then correctly oriented pairs with non-decreasing speeds.
bool scan_is_canonical(const TailScan& scan) {
  if (!scan.zero_columns.empty() && !scan.pairs.empty() &&
      scan.zero_columns.back() > scan.pairs.front().lead) {
    return false;
  }
  int prev = 0;
  for (const auto& p : scan.pairs) {
    if (!p.oriented || p.speed < prev) return false;
    prev = p.speed;
  }
  return true;
}

// Column widths of the tail speed groups: group j holds the speed-j rotation
// planes (the head speed-1 plane excluded).
std::vector<int> group_widths(const std::vector<int>& mult) {
  std::vector<int> widths(mult.size(), 0);
  for (size_t j = 0; j < mult.size(); ++j) {
    widths[j] = 2 * ((j == 1) ? mult[j] - 1 : mult[j]);
  }
  return widths;
}

}  // namespace

double CoefficientSplit::willmore_residual() const {
  return max_abs(Mat(L1 + kI * H1));
}

LaurentLoop CoefficientSplit::loop_A1() const {
  LaurentLoop out(1, form, split);
  out.coeff(-1) = H1;
  out.coeff(0) = H0.cast<Cplx>();
  out.coeff(1) = H1.conjugate();
  return out;
}

LaurentLoop CoefficientSplit::loop_A2() const {
  LaurentLoop out(1, form, split);
  out.coeff(-1) = L1;
  out.coeff(0) = L0.cast<Cplx>();
  out.coeff(1) = L1.conjugate();
  return out;
}

LaurentLoop hol_mc(const LaurentLoop& A1, const LaurentLoop& A2) {
  return Cplx(-1.0, 0.0) * A2 + kI * A1;
}

std::pair<CoefficientSplit, NormalizedPotential> split_and_potential(
    const LaurentLoop& A1, const LaurentLoop& A2, double willmore_tol,
    double structure_tol) {
  if (A1.dim() != A2.dim() || A1.split().head != A2.split().head) {
    throw SchemaError("split_and_potential: loops live on different spaces");
  }
  if (A1.split().head != 4) {
    throw SchemaError(
        "split_and_potential: the head block must be four-dimensional");
  }
  const double structure =
      std::max(A1.residuals().max(), A2.residuals().max());
  if (structure > structure_tol) {
    std::ostringstream msg;
    msg << "split_and_potential: loop structure residual " << structure
        << " exceeds " << structure_tol;
    throw NumericalError(msg.str());
  }
  if (!degree_window_check(A1, structure_tol) ||
      !degree_window_check(A2, structure_tol)) {
    throw NumericalError(
        "split_and_potential: loop has coefficients beyond the degree-one "
        "window");
  }

  CoefficientSplit coeffs;
  coeffs.form = A1.form();
  coeffs.split = A1.split();
  coeffs.H1 = A1.coeff_or_zero(-1);
  coeffs.L1 = A2.coeff_or_zero(-1);
  coeffs.H0 = real_part_checked(A1.coeff_or_zero(0), structure_tol,
                                "split_and_potential: H0");
  coeffs.L0 = real_part_checked(A2.coeff_or_zero(0), structure_tol,
                                "split_and_potential: L0");

  const double willmore = coeffs.willmore_residual();
  if (willmore > willmore_tol) {
    std::ostringstream msg;
    msg << "split_and_potential: conformal-harmonicity residual "
        << "||L1 + i H1|| = " << willmore << " exceeds " << willmore_tol;
    throw NumericalError(msg.str());
  }

  NormalizedPotential pot;
  pot.beta0 = -coeffs.L0.cast<Cplx>() + kI * coeffs.H0.cast<Cplx>();
  pot.beta1 = -coeffs.L1 + kI * coeffs.H1;
  return {coeffs, pot};
}

Mat eval_xi(const NormalizedPotential& pot, Cplx z) {
  const Mat left = expm(Mat(z * pot.beta0));
  const Mat right = expm(Mat(-z * pot.beta0));
  return left * pot.beta1 * right;
}

std::array<double, 4> commutation_residuals(const CoefficientSplit& coeffs,
                                            const RMat& A3) {
  const Mat a3 = A3.cast<Cplx>();
  const Mat& l1 = coeffs.L1;
  const Mat h0 = coeffs.H0.cast<Cplx>();
  const Mat l0 = coeffs.L0.cast<Cplx>();

  std::array<double, 4> out{};
  const Mat ad_l1 = commutator(a3, l1);
  out[0] = std::max(max_abs(Mat(ad_l1 + kI * l1)),
                    max_abs(Mat(commutator(a3, ad_l1) + l1)));

  const Mat beta0 = -l0 + kI * h0;
  const Mat ad_b0 = commutator(a3, beta0);
  out[1] = std::max(max_abs(Mat(ad_b0 + kI * beta0)),
                    max_abs(Mat(commutator(a3, ad_b0) + beta0)));

  out[2] = max_abs(Mat(commutator(h0, l0) +
                       2.0 * kI * commutator(l1, Mat(l1.conjugate())) - a3));
  out[3] = max_abs(Mat(commutator(Mat(l1.conjugate()), beta0)));
  return out;
}

CanonicalA3 canonicalize_A3(const RMat& A3, const BilinearForm& form,
                            const BlockSplit& split, double lattice_tol) {
  const int dim = form.dim;
  if (A3.rows() != A3.cols() || static_cast<int>(A3.rows()) != dim ||
      split.dim() != dim || split.head != 4 || form.timelike != 1) {
    throw SchemaError(
        "canonicalize_A3: need a square matrix over a Lorentz form with a "
        "four-dimensional head block");
  }
  const double scale = std::max(1.0, max_abs(A3));
  if (membership_residual(A3, form) > lattice_tol * scale) {
    throw NumericalError(
        "canonicalize_A3: input does not lie in the algebra of the form");
  }
  if (max_abs(block_off_diagonal_part(A3.cast<Cplx>(), split)) >
      lattice_tol * scale) {
    throw NumericalError(
        "canonicalize_A3: input has an off-diagonal block part; a rotation "
        "generator must preserve the split");
  }
  RMat head_ideal = RMat::Zero(4, 4);
  head_ideal(2, 3) = 1.0;
  head_ideal(3, 2) = -1.0;
  if (max_abs(RMat(A3.topLeftCorner(4, 4) - head_ideal)) >
      lattice_tol * scale) {
    throw NumericalError(
        "canonicalize_A3: head block is not the single unit-speed rotation "
        "plane diag(0_2, S)");
  }

  const int n = split.tail;
  CanonicalA3 out;
  if (n == 0) {
    out.conjugator = RMat::Identity(dim, dim);
    out.mult = {0, 1};
    out.canonical = build_canonical(out.mult, dim);
    out.residual = max_abs(RMat(A3 - out.canonical));
    return out;
  }

  const RMat tail = A3.bottomRightCorner(n, n);

  // Fast path: the tail already lists the canonical layout.
  if (auto direct = scan_tail(tail, lattice_tol);
      direct && scan_is_canonical(*direct) &&
      direct->zero_columns.size() % 2 == 0) {
    const std::vector<int> mult = multiplicities_from(*direct);
    const RMat canonical = build_canonical(mult, dim);
    const double residual = max_abs(RMat(A3 - canonical));
    if (residual <= lattice_tol * scale) {
      out.conjugator = RMat::Identity(dim, dim);
      out.mult = mult;
      out.canonical = canonical;
      out.residual = residual;
      return out;
    }
  }

  Eigen::RealSchur<RMat> schur(tail);
  RMat u = schur.matrixU();
  const RMat t = schur.matrixT();

  auto scan = scan_tail(t, lattice_tol);
  if (!scan) {
    throw NumericalError(
        "canonicalize_A3: tail rotation speeds are off the integer lattice");
  }
  if (scan->zero_columns.size() % 2 != 0) {
    throw NumericalError(
        "canonicalize_A3: odd zero multiplicity in the tail; the fixed "
        "space does not decompose into planes");
  }
  // Orient every rotation block as +speed*S by swapping its two columns.
  for (auto& p : scan->pairs) {
    if (!p.oriented) {
      u.col(p.lead).swap(u.col(p.lead + 1));
      p.oriented = true;
    }
  }
  std::stable_sort(scan->pairs.begin(), scan->pairs.end(),
                   [](const TailScan::Pair& a, const TailScan::Pair& b) {
                     return a.speed < b.speed;
                   });

  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int zc : scan->zero_columns) order.push_back(zc);
  for (const auto& p : scan->pairs) {
    order.push_back(p.lead);
    order.push_back(p.lead + 1);
  }
  RMat v(n, n);
  for (int idx = 0; idx < n; ++idx) {
    v.col(idx) = u.col(order[static_cast<size_t>(idx)]);
  }
  if (v.determinant() < 0.0) {
    if (!scan->zero_columns.empty()) {
      v.col(0) *= -1.0;  // reflecting inside a fixed plane is harmless
    } else {
      throw NumericalError(
          "canonicalize_A3: the canonical layout needs an "
          "orientation-reversing conjugator and the tail has no fixed plane "
          "to absorb it");
    }
  }

  out.mult = multiplicities_from(*scan);
  out.canonical = build_canonical(out.mult, dim);
  out.conjugator = RMat::Identity(dim, dim);
  out.conjugator.bottomRightCorner(n, n) = v;
  out.residual = max_abs(
      RMat(conjugate_by_frame(out.conjugator, A3, form) - out.canonical));
  if (out.residual > lattice_tol * scale) {
    throw NumericalError(
        "canonicalize_A3: conjugation missed the canonical form beyond the "
        "lattice tolerance");
  }
  return out;
}

Mat pattern_q1() {
  Mat q(2, 2);
  q << Cplx(1, 0), Cplx(0, -1), Cplx(-1, 0), Cplx(0, 1);
  return q;
}

Mat pattern_q2() {
  Mat q(2, 2);
  q << Cplx(1, 0), Cplx(0, -1), Cplx(0, 1), Cplx(1, 0);
  return q;
}

Vec pattern_e0() {
  Vec e(2);
  e << Cplx(1, 0), Cplx(0, -1);
  return e;
}

BlockData extract_block_data(const CoefficientSplit& coeffs,
                             const CanonicalA3& canon) {
  const BlockSplit& split = coeffs.split;
  const int n = split.tail;
  const std::vector<int> widths = group_widths(canon.mult);
  int total = 0;
  for (int w : widths) total += w;
  if (total != n) {
    throw SchemaError(
        "extract_block_data: speed multiplicities do not fill the tail");
  }
  std::vector<int> offsets(widths.size() + 1, 0);
  for (size_t j = 0; j < widths.size(); ++j) {
    offsets[j + 1] = offsets[j] + widths[j];
  }

  const Mat beta0 =
      -coeffs.L0.cast<Cplx>() + kI * coeffs.H0.cast<Cplx>();
  const Mat beta1 = -coeffs.L1 + kI * coeffs.H1;
  const Mat q1 = pattern_q1();
  const Mat q2 = pattern_q2();
  const Vec e0 = pattern_e0();
  // The B-scalars record the couplings of beta1 / 2 (the lambda^{-1} part of
  // the monodromy, with its sign flipped), so the beta1 cells themselves are
  // fitted against the doubled patterns 2*Q1, 2*e0, 2*Q2.
  const Mat q1_b1 = 2.0 * q1;
  const Mat q2_b1 = 2.0 * q2;
  const Mat e0_b1 = 2.0 * e0;

  BlockData out;
  out.mult = canon.mult;
  out.B1 = beta1.block(0, 4, 4, n);
  double res = 0.0;

  // Coefficient parities relative to the split (independent of the fits).
  res = std::max(res, max_abs(block_off_diagonal_part(beta0, split)));
  res = std::max(res, max_abs(block_diagonal_part(beta1, split)));

  const size_t levels = widths.size();
  for (size_t j = 0; j < levels; ++j) {
    const int off = offsets[j];
    const int pairs = widths[j] / 2;
    if (pairs == 0) continue;

    // Rows (0,1): only the speed-1 group couples, through Q1.
    if (j == 1) {
      for (int k = 0; k < pairs; ++k) {
        const Mat blk = out.B1.block(0, off + 2 * k, 2, 2);
        out.a1.push_back(fit_scalar(q1_b1, blk, res));
      }
    } else {
      res = std::max(res, max_abs(Mat(out.B1.block(0, off, 2, widths[j]))));
    }

    // Rows (2,3): speed-0 couples through e0 columns, speed-2 through Q2.
    if (j == 0) {
      for (int k = 0; k < pairs; ++k) {
        const Mat col_b = out.B1.block(2, off + 2 * k, 2, 1);
        const Mat col_bh = out.B1.block(2, off + 2 * k + 1, 2, 1);
        out.b.push_back(fit_scalar(e0_b1, col_b, res));
        out.bhat.push_back(fit_scalar(e0_b1, col_bh, res));
      }
    } else if (j == 2) {
      for (int k = 0; k < pairs; ++k) {
        const Mat blk = out.B1.block(2, off + 2 * k, 2, 2);
        out.c1.push_back(fit_scalar(q2_b1, blk, res));
      }
    } else {
      res = std::max(res, max_abs(Mat(out.B1.block(2, off, 2, widths[j]))));
    }
  }

  // Head of beta0: the two diagonal 2x2 cells vanish and the lightlike pair
  // couples to the head rotation plane through rows (a,-ia), (c,-ic).
  res = std::max(res, max_abs(Mat(beta0.block(0, 0, 2, 2))));
  res = std::max(res, max_abs(Mat(beta0.block(2, 2, 2, 2))));
  const Mat r00 = beta0.block(0, 2, 2, 2);
  out.a = fit_scalar(e0.transpose(), r00.row(0), res);
  out.c = fit_scalar(e0.transpose(), r00.row(1), res);

  // Tail of beta0: adjacent speed groups couple through Q2 cells; every
  // other cell, including the within-group blocks, vanishes.
  const Mat r = beta0.block(4, 4, n, n);
  for (size_t j = 0; j < levels; ++j) {
    for (size_t l = 0; l < levels; ++l) {
      if (widths[j] == 0 || widths[l] == 0) continue;
      if (l == j + 1) {
        const int pj = widths[j] / 2;
        const int pl = widths[l] / 2;
        Mat grid(pj, pl);
        for (int kk = 0; kk < pj; ++kk) {
          for (int ll = 0; ll < pl; ++ll) {
            const Mat blk =
                r.block(offsets[j] + 2 * kk, offsets[l] + 2 * ll, 2, 2);
            grid(kk, ll) = fit_scalar(q2, blk, res);
          }
        }
        out.q.push_back(grid);
        out.q_from.push_back(static_cast<int>(j));
      } else if (j + 1 != l && l + 1 != j) {
        res = std::max(
            res, max_abs(Mat(r.block(offsets[j], offsets[l], widths[j],
                                     widths[l]))));
      }
      // l == j - 1 is determined by membership from the upper block.
    }
  }

  out.pattern_residual = res;
  return out;
}

double isotropy_residual(const BlockData& blocks) {
  if (blocks.B1.cols() == 0) return 0.0;
  RVec head_diag(4);
  head_diag << -1.0, 1.0, 1.0, 1.0;
  const Mat gram =
      blocks.B1.transpose() * head_diag.asDiagonal() * blocks.B1;
  return max_abs(gram);
}

WuAnalysis analyze_monodromy(const LaurentLoop& A1, const LaurentLoop& A2,
                             const RMat& A3, double willmore_tol,
                             double lattice_tol) {
  auto [coeffs, pot] = split_and_potential(A1, A2, willmore_tol);
  WuAnalysis out;
  out.canon = canonicalize_A3(A3, coeffs.form, coeffs.split, lattice_tol);

  const RMat& f = out.canon.conjugator;
  out.coeffs.form = coeffs.form;
  out.coeffs.split = coeffs.split;
  out.coeffs.H1 = conjugate_by_frame(f, coeffs.H1, coeffs.form);
  out.coeffs.L1 = conjugate_by_frame(f, coeffs.L1, coeffs.form);
  out.coeffs.H0 = conjugate_by_frame(f, coeffs.H0, coeffs.form);
  out.coeffs.L0 = conjugate_by_frame(f, coeffs.L0, coeffs.form);

  out.potential.beta0 =
      -out.coeffs.L0.cast<Cplx>() + kI * out.coeffs.H0.cast<Cplx>();
  out.potential.beta1 = -out.coeffs.L1 + kI * out.coeffs.H1;

  out.blocks = extract_block_data(out.coeffs, out.canon);
  out.commutation = commutation_residuals(out.coeffs, out.canon.canonical);
  out.isotropy = isotropy_residual(out.blocks);
  return out;
}

double scalar_identity_residual(const BlockData& blocks) {
  double sum_b = 0.0;
  for (const Cplx& v : blocks.b) sum_b += std::norm(v);
  for (const Cplx& v : blocks.bhat) sum_b += std::norm(v);
  double sum_c1 = 0.0;
  for (const Cplx& v : blocks.c1) sum_c1 += std::norm(v);
  const double balance = std::norm(blocks.c) - std::norm(blocks.a) - 1.0 +
                         4.0 * sum_b - 8.0 * sum_c1;
  return std::abs(balance);
}

LorentzNormalization lorentz_normalize(const WuAnalysis& analysis) {
  const Cplx a = analysis.blocks.a;
  const Cplx c = analysis.blocks.c;
  const double ca = std::abs(c);
  const double aa = std::abs(a);

  LorentzNormalization out;
  out.identity_residual = scalar_identity_residual(analysis.blocks);

  if (aa == 0.0 && ca == 0.0) {
    out.t = 0.0;
    out.data = analysis;
    return out;
  }
  if (ca <= aa) {
    std::ostringstream msg;
    msg << "lorentz_normalize: |c| = " << ca << " <= |a| = " << aa
        << "; no boost removes the time coupling";
    throw NumericalError(msg.str());
  }
  const Cplx cross = a * std::conj(c);
  if (std::abs(cross.imag()) > 1e-9 * std::max(1.0, std::abs(cross))) {
    throw NumericalError(
        "lorentz_normalize: a/c is not real; a boost in the (time, base) "
        "plane cannot normalize this pair");
  }

  out.t = std::atanh(-cross.real() / (ca * ca));

  // The boost acts as X -> T_t X T_t^{-1}; conjugate_by_frame computes
  // F^{-1} X F, so the frame to conjugate by is T_{-t}.
  const int dim = analysis.coeffs.form.dim;
  RMat boost = RMat::Identity(dim, dim);
  boost(0, 0) = std::cosh(out.t);
  boost(0, 1) = -std::sinh(out.t);
  boost(1, 0) = -std::sinh(out.t);
  boost(1, 1) = std::cosh(out.t);

  WuAnalysis next;
  next.coeffs.form = analysis.coeffs.form;
  next.coeffs.split = analysis.coeffs.split;
  next.coeffs.H1 =
      conjugate_by_frame(boost, analysis.coeffs.H1, analysis.coeffs.form);
  next.coeffs.L1 =
      conjugate_by_frame(boost, analysis.coeffs.L1, analysis.coeffs.form);
  next.coeffs.H0 =
      conjugate_by_frame(boost, analysis.coeffs.H0, analysis.coeffs.form);
  next.coeffs.L0 =
      conjugate_by_frame(boost, analysis.coeffs.L0, analysis.coeffs.form);
  next.potential.beta0 =
      -next.coeffs.L0.cast<Cplx>() + kI * next.coeffs.H0.cast<Cplx>();
  next.potential.beta1 = -next.coeffs.L1 + kI * next.coeffs.H1;

  next.canon = analysis.canon;  // the boost commutes with the canonical A3
  next.canon.conjugator = analysis.canon.conjugator * boost;

  next.blocks = extract_block_data(next.coeffs, next.canon);
  next.commutation =
      commutation_residuals(next.coeffs, next.canon.canonical);
  next.isotropy = isotropy_residual(next.blocks);

  out.data = next;
  return out;
}

bool minimality_certificate(const WuAnalysis& analysis, double tol) {
  const Mat& b0 = analysis.potential.beta0;
  const Mat& b1 = analysis.potential.beta1;
  const Mat xi_a = eval_xi(analysis.potential, Cplx(0.37, 0.21));
  const Mat xi_b = eval_xi(analysis.potential, Cplx(-1.1, 0.6));
  for (const Mat* m : {&b0, &b1, &xi_a, &xi_b}) {
    const double edge =
        std::max(max_abs(Mat(m->row(0))), max_abs(Mat(m->col(0))));
    if (edge > tol) return false;
  }
  return true;
}

}  // namespace willmore
