#include "willmore/solvable.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <sstream>

namespace willmore {

namespace {

RVec vectorize(const RMat& x) {
  return Eigen::Map<const RVec>(x.data(), x.size());
}

// Rank of the span and the indices of a spanning subset, via a
// column-pivoted QR of the stacked vectorizations.
std::pair<int, std::vector<int>> span_rank(const std::vector<RMat>& mats,
                                           double rank_tol) {
  if (mats.empty()) return {0, {}};
  const int cells = static_cast<int>(mats[0].size());
  RMat stacked(cells, static_cast<int>(mats.size()));
  for (size_t j = 0; j < mats.size(); ++j) {
    stacked.col(static_cast<int>(j)) = vectorize(mats[j]);
  }
  Eigen::ColPivHouseholderQR<RMat> qr(stacked);
  const RMat r = qr.matrixR();
  const double lead = std::abs(r(0, 0));
  if (lead == 0.0) return {0, {}};
  int rank = 0;
  const int diag = static_cast<int>(std::min(r.rows(), r.cols()));
  while (rank < diag && std::abs(r(rank, rank)) > rank_tol * lead) ++rank;
  std::vector<int> picks;
  for (int i = 0; i < rank; ++i) {
    picks.push_back(static_cast<int>(qr.colsPermutation().indices()(i)));
  }
  std::sort(picks.begin(), picks.end());
  return {rank, picks};
}

// Distance of `target` to the span of `mats` (least squares, max norm).
double span_distance(const std::vector<RMat>& mats, const RMat& target) {
  if (mats.empty()) return max_abs(target);
  const int cells = static_cast<int>(mats[0].size());
  RMat stacked(cells, static_cast<int>(mats.size()));
  for (size_t j = 0; j < mats.size(); ++j) {
    stacked.col(static_cast<int>(j)) = vectorize(mats[j]);
  }
  const RVec rhs = vectorize(target);
  const RVec sol = stacked.colPivHouseholderQr().solve(rhs);
  return (stacked * sol - rhs).cwiseAbs().maxCoeff();
}

}  // namespace

RMat solvable_generator(double a, const RVec& x) {
  const int tail = static_cast<int>(x.size());
  const int dim = tail + 2;
  RMat out = RMat::Zero(dim, dim);
  out(0, 1) = a;
  out(1, 0) = a;
  if (tail > 0) {
    out.block(0, 2, 1, tail) = x.transpose();
    out.block(1, 2, 1, tail) = -x.transpose();
    out.block(2, 0, tail, 1) = x;
    out.block(2, 1, tail, 1) = x;
  }
  return out;
}

std::vector<RMat> SolvableAlgebra::basis() const {
  std::vector<RMat> out;
  out.reserve(N.size() + 1);
  out.push_back(E);
  for (const RMat& n : N) out.push_back(n);
  return out;
}

SolvableAlgebra build_solvable(int p) {
  if (p < 2) {
    throw SchemaError("build_solvable: need p >= 2 for a grading plus at "
                      "least one nilpotent direction");
  }
  SolvableAlgebra alg;
  alg.form = lorentz_form(p + 1);
  alg.E = solvable_generator(-1.0, RVec::Zero(p - 1));
  for (int i = 0; i < p - 1; ++i) {
    RVec e = RVec::Zero(p - 1);
    e(i) = 1.0;
    alg.N.push_back(solvable_generator(0.0, e));
  }
  return alg;
}

StructureReport verify_structure(const std::vector<RMat>& basis,
                                 const BilinearForm& form, double rank_tol) {
  if (basis.empty()) {
    throw SchemaError("verify_structure: empty basis");
  }
  const int dim = static_cast<int>(basis[0].rows());
  for (const RMat& b : basis) {
    if (b.rows() != dim || b.cols() != dim || dim != form.dim) {
      throw SchemaError(
          "verify_structure: basis matrices must all match the form "
          "dimension");
    }
  }

  StructureReport report;
  for (const RMat& b : basis) {
    report.membership =
        std::max(report.membership, membership_residual(b, form));
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const RMat bracket = commutator(basis[i], basis[j]);
      report.closure = std::max(report.closure, span_distance(basis, bracket));
    }
  }
  for (size_t i = 1; i < basis.size(); ++i) {
    report.weight = std::max(
        report.weight, max_abs(RMat(commutator(basis[0], basis[i]) -
                                    basis[i])));
    report.nilpotent =
        std::max(report.nilpotent, max_abs(RMat(basis[i] * basis[i] *
                                                basis[i])));
    for (size_t j = i + 1; j < basis.size(); ++j) {
      report.abelian = std::max(report.abelian,
                                max_abs(commutator(basis[i], basis[j])));
    }
  }

  // Derived series: bracket a spanning subset with itself until the rank
  // stabilizes or hits zero.
  auto [rank0, picks0] = span_rank(basis, rank_tol);
  report.dimension = rank0;
  report.derived_dims.push_back(rank0);
  std::vector<RMat> reduced;
  reduced.reserve(picks0.size());
  for (int idx : picks0) reduced.push_back(basis[static_cast<size_t>(idx)]);
  for (size_t step = 0; step < 8; ++step) {
    std::vector<RMat> derived;
    for (size_t i = 0; i < reduced.size(); ++i) {
      for (size_t j = i + 1; j < reduced.size(); ++j) {
        derived.push_back(commutator(reduced[i], reduced[j]));
      }
    }
    auto [rank, picks] = span_rank(derived, rank_tol);
    report.derived_dims.push_back(rank);
    if (rank == 0 || rank == report.derived_dims[report.derived_dims.size() - 2]) {
      break;
    }
    std::vector<RMat> next;
    for (int idx : picks) next.push_back(derived[static_cast<size_t>(idx)]);
    reduced.swap(next);
  }
  report.solvable = report.derived_dims.back() == 0;
  return report;
}

BracketCheck halfplane_bracket_check(const RMat& b, const RMat& d) {
  if (b.rows() != b.cols() || d.rows() != d.cols() || b.rows() != d.rows()) {
    throw SchemaError(
        "halfplane_bracket_check: inputs must be square and equal-sized");
  }
  BracketCheck out;
  out.bracket_residual = max_abs(RMat(commutator(b, d) - 2.0 * d));
  const int dim = static_cast<int>(d.rows());
  if (dim >= 3) {
    out.shape_checked = true;
    const RVec x = d.col(0).tail(dim - 2);
    out.shape_residual = max_abs(RMat(d - solvable_generator(0.0, x)));
  }
  return out;
}

RMat sigma3() {
  RMat s(2, 2);
  s << 1.0, 0.0, 0.0, -1.0;
  return s;
}

RMat nu() {
  RMat n(2, 2);
  n << 0.0, 1.0, 0.0, 0.0;
  return n;
}

}  // namespace willmore
