#include "cocopos/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>
#include <utility>

#include "cocopos/errors.hpp"

namespace cocopos {

namespace {

void require_psd(const ComplexMatrix& a, double tol, const char* check) {
  const PsdResult r = is_psd(a, tol);
  if (!r.psd) {
    std::ostringstream os;
    os << check << ": input is not positive semidefinite (min eigenvalue " << r.min_eig << ")";
    throw PreconditionError(os.str(), r.min_eig);
  }
}

void require_ppt(const BlockMatrix& a, double tol, const char* check) {
  const PptResult r = is_ppt(a, tol);
  if (!r.ppt) {
    std::ostringstream os;
    os << check << ": input is not PPT (min eigenvalue of A " << r.min_eig << ", of A^tau "
       << r.min_eig_tau << ")";
    throw PreconditionError(os.str(), std::min(r.min_eig, r.min_eig_tau));
  }
}

CheckReport make_report(std::string name, const BlockMatrix& a, double tol) {
  CheckReport report;
  report.check_name = std::move(name);
  report.tolerance = tol;
  report.shape = {a.m(), a.n()};
  return report;
}

ComplexMatrix eye(std::size_t n) { return ComplexMatrix::identity(n); }

std::vector<std::size_t> merge_members(const IndexSet& a, const IndexSet& b, int mode) {
  std::vector<std::size_t> out;
  const auto& x = a.members();
  const auto& y = b.members();
  switch (mode) {
    case 0: std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out)); break;
    case 1: std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out)); break;
    default: std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out)); break;
  }
  return out;
}

void require_same_universe(const IndexSet& a, const IndexSet& b) {
  if (a.universe() != b.universe()) throw ShapeError("index sets live in different universes");
}

void require_equal_cardinality(const IndexSet& alpha, const IndexSet& beta, const char* check) {
  if (alpha.size() != beta.size()) {
    std::ostringstream os;
    os << check << ": |alpha| = " << alpha.size() << " differs from |beta| = " << beta.size();
    throw UsageError(os.str());
  }
}

double real_trace(const ComplexMatrix& x) { return trace(x).real(); }

}  // namespace

IndexSet::IndexSet(std::size_t universe, std::vector<std::size_t> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw IndexError("IndexSet: duplicate member");
  }
  if (!members_.empty() && members_.back() >= universe_) {
    throw IndexError("IndexSet: member " + std::to_string(members_.back()) + " outside universe of size " +
                     std::to_string(universe_));
  }
}

IndexSet IndexSet::full(std::size_t universe) {
  std::vector<std::size_t> all(universe);
  for (std::size_t i = 0; i < universe; ++i) all[i] = i;
  return IndexSet(universe, std::move(all));
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  require_same_universe(a, b);
  return IndexSet(a.universe(), merge_members(a, b, 0));
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  require_same_universe(a, b);
  return IndexSet(a.universe(), merge_members(a, b, 1));
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  require_same_universe(a, b);
  return IndexSet(a.universe(), merge_members(a, b, 2));
}

std::vector<IndexSet> subsets_of_size(std::size_t universe, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > universe) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.emplace_back(universe, pick);
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == universe - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

void CheckReport::add_residual(std::string label, const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  ResidualCheck r;
  r.label = std::move(label);
  r.min_eig = min_eigenvalue(lhs - rhs);
  r.scale = std::max({1.0, frobenius_norm(lhs), frobenius_norm(rhs)});
  r.passed = r.min_eig >= -tolerance * r.scale;
  passed = passed && r.passed;
  residual_min_eig = residual_min_eig ? std::min(*residual_min_eig, r.min_eig) : r.min_eig;
  residuals.push_back(std::move(r));
}

void CheckReport::add_gap(std::string label, double gap, std::initializer_list<double> constituents) {
  ScalarGap g;
  g.label = std::move(label);
  g.gap = gap;
  g.scale = 1.0;
  for (double c : constituents) g.scale = std::max(g.scale, std::abs(c));
  g.passed = g.gap >= -tolerance * g.scale;
  passed = passed && g.passed;
  scalar_gap = scalar_gap ? std::min(*scalar_gap, g.gap) : g.gap;
  gaps.push_back(std::move(g));
}

const ScalarGap* CheckReport::find_gap(const std::string& label) const {
  for (const ScalarGap& g : gaps) {
    if (g.label == label) return &g;
  }
  return nullptr;
}

CheckReport check_copositive_partial_trace(const BlockMatrix& a, double tol) {
  require_psd(a.mat(), tol, "check_copositive_partial_trace");
  CheckReport report = make_report("copositive_partial_trace", a, tol);
  const BlockMatrix at = partial_transpose(a);
  report.add_residual("tr2(A^tau) (x) I - A^tau", kron(partial_trace_2(at), eye(a.n())), at.mat());
  report.add_residual("I (x) tr1(A^tau) - A^tau", kron(eye(a.m()), partial_trace_1(at)), at.mat());
  return report;
}

CheckReport check_ppt_reduction(const BlockMatrix& a, double tol) {
  require_ppt(a, tol, "check_ppt_reduction");
  CheckReport report = make_report("ppt_reduction", a, tol);
  report.add_residual("I (x) tr1(A) - A", kron(eye(a.m()), partial_trace_1(a)), a.mat());
  report.add_residual("tr2(A) (x) I - A", kron(partial_trace_2(a), eye(a.n())), a.mat());
  return report;
}

CheckReport check_combined_reduction(const BlockMatrix& a, double tol) {
  require_ppt(a, tol, "check_combined_reduction");
  CheckReport report = make_report("combined_reduction", a, tol);
  const BlockMatrix at = partial_transpose(a);
  for (const BlockMatrix* x : {&a, &at}) {
    const ComplexMatrix lhs = kron(eye(x->m()), partial_trace_1(*x)) + kron(partial_trace_2(*x), eye(x->n()));
    report.add_residual(x == &a ? "I (x) tr1(A) + tr2(A) (x) I - 2A"
                                : "I (x) tr1(A^tau) + tr2(A^tau) (x) I - 2A^tau",
                        lhs, 2.0 * x->mat());
  }
  return report;
}

CheckReport check_upper_bound(const BlockMatrix& a, double tol) {
  require_psd(a.mat(), tol, "check_upper_bound");
  CheckReport report = make_report("upper_bound", a, tol);
  report.note = a.m() == 2 ? "m = 2" : (a.m() < 2 ? "m = 1" : "m > 2, general-m extension");
  const ComplexMatrix larger = a.mat() + trace(a.mat()) * eye(a.m() * a.n());
  const ComplexMatrix smaller = kron(eye(a.m()), partial_trace_1(a)) + kron(partial_trace_2(a), eye(a.n()));
  report.add_residual("A + tr(A) I - I (x) tr1(A) - tr2(A) (x) I", larger, smaller);
  return report;
}

CheckReport check_phi_lower(const BlockMatrix& a, double tol) {
  require_psd(a.mat(), tol, "check_phi_lower");
  CheckReport report = make_report("phi_lower", a, tol);
  const BlockMatrix at = partial_transpose(a);
  const ComplexMatrix neg = -at.mat();
  report.add_residual("tr2(A^tau) (x) I + A^tau", kron(partial_trace_2(at), eye(a.n())), neg);
  report.add_residual("I (x) tr1(A^tau) + A^tau", kron(eye(a.m()), partial_trace_1(at)), neg);
  return report;
}

namespace {

struct Block2Parts {
  ComplexMatrix a, b, c;
};

Block2Parts split_block2(const BlockMatrix& a2) {
  if (a2.m() != 2) {
    throw UsageError("check_block2: expected a 2 x 2 block matrix, got m = " + std::to_string(a2.m()));
  }
  return {block_get(a2, 0, 0), block_get(a2, 0, 1), block_get(a2, 1, 1)};
}

// G = larger - smaller with the two constituents kept apart for scaling.
std::pair<ComplexMatrix, ComplexMatrix> block2_sides(const Block2Parts& p) {
  const ComplexMatrix bh = conj_transpose(p.b);
  const Complex tr_a = trace(p.a);
  const Complex tr_b = trace(p.b);
  const Complex tr_c = trace(p.c);
  const ComplexMatrix larger_blocks[] = {tr_c * p.a, std::conj(tr_b) * p.b, tr_b * bh, tr_a * p.c};
  const ComplexMatrix smaller_blocks[] = {p.b * bh, p.a * p.c, p.c * p.a, bh * p.b};
  return {block_assemble(2, larger_blocks).mat(), block_assemble(2, smaller_blocks).mat()};
}

}  // namespace

ComplexMatrix block2_matrix(const BlockMatrix& a2) {
  auto [larger, smaller] = block2_sides(split_block2(a2));
  return larger - smaller;
}

CheckReport check_block2(const BlockMatrix& a2, double tol) {
  const Block2Parts p = split_block2(a2);
  require_psd(a2.mat(), tol, "check_block2");
  CheckReport report = make_report("block2", a2, tol);
  const auto [larger, smaller] = block2_sides(p);
  report.add_residual("G", larger, smaller);

  const double tr_ac = real_trace(p.a * p.c);
  const double tr_bb = real_trace(conj_transpose(p.b) * p.b);
  const double tr_a_tr_c = real_trace(p.a) * real_trace(p.c);
  const double abs_tr_b_sq = std::norm(trace(p.b));
  const auto constituents = {tr_ac, tr_bb, tr_a_tr_c, abs_tr_b_sq};
  report.add_gap("cross_sum", (tr_a_tr_c + abs_tr_b_sq) - (tr_ac + tr_bb), constituents);
  report.add_gap("cross_diff", (tr_a_tr_c - abs_tr_b_sq) - (tr_bb - tr_ac), constituents);
  report.add_gap("cross_diff_abs", (tr_a_tr_c - abs_tr_b_sq) - std::abs(tr_bb - tr_ac), constituents);
  return report;
}

ComplexMatrix submatrix(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta) {
  if (!a.is_square() || alpha.universe() != a.rows() || beta.universe() != a.rows()) {
    throw ShapeError("submatrix: index set universe does not match the matrix side");
  }
  ComplexMatrix out(alpha.size(), beta.size());
  for (std::size_t r = 0; r < alpha.size(); ++r) {
    for (std::size_t c = 0; c < beta.size(); ++c) out(r, c) = a(alpha.members()[r], beta.members()[c]);
  }
  return out;
}

ComplexMatrix overlap_embedding(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta) {
  require_equal_cardinality(alpha, beta, "overlap_embedding");
  const ComplexMatrix cross = submatrix(a, alpha, beta);
  const ComplexMatrix blocks[] = {submatrix(a, alpha, alpha), cross, conj_transpose(cross),
                                  submatrix(a, beta, beta)};
  if (alpha.empty()) return ComplexMatrix();
  return block_assemble(2, blocks).mat();
}

CheckReport check_trace_submatrix(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta,
                                  double tol) {
  require_equal_cardinality(alpha, beta, "check_trace_submatrix");
  if (alpha.empty()) throw UsageError("check_trace_submatrix: index sets must be nonempty");
  const ComplexMatrix x = submatrix(a, alpha, alpha);
  const ComplexMatrix y = submatrix(a, beta, beta);
  const ComplexMatrix z = submatrix(a, alpha, beta);
  require_psd(a, tol, "check_trace_submatrix");

  CheckReport report;
  report.check_name = "trace_submatrix";
  report.tolerance = tol;
  report.shape = {a.rows()};
  const double tr_xy = real_trace(x * y);
  const double tr_zz = real_trace(conj_transpose(z) * z);
  const double tr_x_tr_y = real_trace(x) * real_trace(y);
  const double abs_tr_z_sq = std::norm(trace(z));
  const auto constituents = {tr_xy, tr_zz, tr_x_tr_y, abs_tr_z_sq};
  report.add_gap("sub_sum", (tr_x_tr_y + abs_tr_z_sq) - (tr_xy + tr_zz), constituents);
  report.add_gap("sub_diff_abs", (tr_x_tr_y - abs_tr_z_sq) - std::abs(tr_xy - tr_zz), constituents);
  return report;
}

CheckReport check_det_submatrix(const ComplexMatrix& a, const IndexSet& alpha, const IndexSet& beta,
                                double tol) {
  require_equal_cardinality(alpha, beta, "check_det_submatrix");
  if (alpha == beta) throw UsageError("check_det_submatrix: alpha and beta must differ");
  const IndexSet both = set_union(alpha, beta);
  const IndexSet common = set_intersection(alpha, beta);
  require_psd(a, tol, "check_det_submatrix");

  const double det_alpha = determinant(submatrix(a, alpha, alpha)).real();
  const double det_beta = determinant(submatrix(a, beta, beta)).real();
  const double cross_sq = std::norm(determinant(submatrix(a, alpha, beta)));
  const double det_union = determinant(submatrix(a, both, both)).real();
  const double det_common = determinant(submatrix(a, common, common)).real();

  CheckReport report;
  report.check_name = "det_submatrix";
  report.tolerance = tol;
  report.shape = {a.rows()};
  const double product = det_alpha * det_beta;
  const double lhs = det_union * det_common;
  report.add_gap("det_gap", product - cross_sq - lhs, {product, cross_sq, lhs});
  return report;
}

}  // namespace cocopos
