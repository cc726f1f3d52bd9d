#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cocopos/blockops.hpp"
#include "cocopos/densemat.hpp"

namespace cocopos {

// Sorted, duplicate-free subset of {0, ..., universe-1}.
class IndexSet {
 public:
  // Sorts and validates; throws IndexError on duplicates or members outside
  // the universe.
  IndexSet(std::size_t universe, std::vector<std::size_t> members);

  static IndexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t universe_;
  std::vector<std::size_t> members_;
};

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);

// All k-element subsets of {0..universe-1} in lexicographic order.
std::vector<IndexSet> subsets_of_size(std::size_t universe, std::size_t k);

// One positivity test on a residual matrix lhs - rhs.
struct ResidualCheck {
  std::string label;
  double min_eig = 0.0;
  double scale = 1.0;  // max(1, ||lhs||_F, ||rhs||_F)
  bool passed = false;
};

// One scalar inequality written as gap = larger side - smaller side >= 0.
struct ScalarGap {
  std::string label;
  double gap = 0.0;
  double scale = 1.0;  // max(1, |each constituent term|)
  bool passed = false;
};

struct CheckReport {
  std::string check_name;
  bool passed = true;
  std::optional<double> residual_min_eig;  // smallest over residuals
  std::optional<double> scalar_gap;        // smallest over gaps
  double tolerance = kDefaultTolerance;
  std::vector<std::size_t> shape;          // {m, n} or {dim}
  std::string seed_info;
  std::string note;
  std::vector<ResidualCheck> residuals;
  std::vector<ScalarGap> gaps;

  // Eigensolves lhs - rhs and folds the outcome into passed.
  void add_residual(std::string label, const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  void add_gap(std::string label, double gap, std::initializer_list<double> constituents);

  const ScalarGap* find_gap(const std::string& label) const;
};

// (tr_2 A^tau) (x) I_n >= A^tau and I_m (x) tr_1 A^tau >= A^tau for PSD A.
// Throws PreconditionError if A is not PSD.
CheckReport check_copositive_partial_trace(const BlockMatrix& a, double tol = kDefaultTolerance);

// I_m (x) tr_1 A >= A and (tr_2 A) (x) I_n >= A for PPT A.
CheckReport check_ppt_reduction(const BlockMatrix& a, double tol = kDefaultTolerance);

// I_m (x) tr_1 A + (tr_2 A) (x) I_n >= 2A, and the same for A^tau, for PPT A.
CheckReport check_combined_reduction(const BlockMatrix& a, double tol = kDefaultTolerance);

// I_m (x) tr_1 A + (tr_2 A) (x) I_n <= A + (tr A) I_mn for PSD A. Proven
// directly for m = 2; the report note marks m > 2 as the general-m case.
CheckReport check_upper_bound(const BlockMatrix& a, double tol = kDefaultTolerance);

// (tr_2 A^tau) (x) I_n >= -A^tau and I_m (x) tr_1 A^tau >= -A^tau for PSD A.
CheckReport check_phi_lower(const BlockMatrix& a, double tol = kDefaultTolerance);

// For PSD [[A, B], [B*, C]] (m = 2): the matrix
//   G = [[(tr C)A - BB*, (tr B*)B - AC], [(tr B)B* - CA, (tr A)C - B*B]]
// is PSD, and the trace consequences
//   cross_sum:      tr(AC) + tr(B*B) <= tr A tr C + |tr B|^2
//   cross_diff:     tr(B*B) - tr(AC) <= tr A tr C - |tr B|^2
//   cross_diff_abs: |tr(B*B) - tr(AC)| <= tr A tr C - |tr B|^2
// hold. Throws UsageError for m != 2.
CheckReport check_block2(const BlockMatrix& a2, double tol = kDefaultTolerance);

// The matrix G above, exposed for tests and the CLI.
ComplexMatrix block2_matrix(const BlockMatrix& a2);

// A[alpha, beta]. Throws ShapeError unless both universes equal A's side.
ComplexMatrix submatrix(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta);

// [[A[alpha], A[alpha, beta]], [A[alpha, beta]*, A[beta]]], a selection
// congruence S A S* and therefore PSD whenever A is. Throws UsageError when
// |alpha| != |beta|.
ComplexMatrix overlap_embedding(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta);

// Gaps "sub_sum" and "sub_diff_abs" for the submatrix trace inequalities
//   tr(A[a]A[b]) + tr(A[a,b]* A[a,b]) <= tr A[a] tr A[b] + |tr A[a,b]|^2
//   |tr(A[a]A[b]) - tr(A[a,b]* A[a,b])| <= tr A[a] tr A[b] - |tr A[a,b]|^2
CheckReport check_trace_submatrix(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta,
                                  double tol = kDefaultTolerance);

// Gap "det_gap":
//   det A[a] det A[b] - |det A[a,b]|^2 - det A[a u b] det A[a n b] >= 0,
// with det over the empty set equal to 1. Requires alpha != beta: at
// alpha == beta the left side is det^2 and the right side 0.
CheckReport check_det_submatrix(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta,
                                double tol = kDefaultTolerance);

}  // namespace cocopos
