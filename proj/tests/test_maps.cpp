#include <doctest.h>

#include <random>

#include "cocopos/errors.hpp"
#include "cocopos/maps.hpp"
#include "cocopos/randgen.hpp"
#include "oracles.hpp"

using namespace cocopos;

namespace {

ComplexMatrix e(std::size_t i, std::size_t j, std::size_t n = 2) { return ComplexMatrix::unit(n, n, i, j); }

void check_spectrum(const ComplexMatrix& x, const std::vector<double>& expected) {
  const std::vector<double> got = hermitian_eigenvalues(x).values;
  REQUIRE(got.size() == expected.size());
  for (std::size_t k = 0; k < got.size(); ++k) CHECK(std::abs(got[k] - expected[k]) <= 1e-10);
}

}  // namespace

TEST_CASE("LinearMap validates its basis images") {
  CHECK_THROWS_AS(LinearMap(2, 2, {e(0, 0)}), ShapeError);
  CHECK_THROWS_AS(LinearMap(1, 2, {ComplexMatrix(3, 3)}), ShapeError);
}

TEST_CASE("builtin maps and apply_map") {
  CHECK(apply_map(builtin_map(BuiltinMap::kIdentity, 2), e(0, 1)) == e(0, 1));
  CHECK(apply_map(builtin_map(BuiltinMap::kTranspose, 2), e(0, 1)) == e(1, 0));
  CHECK(apply_map(builtin_map(BuiltinMap::kPsi, 2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(2));
  CHECK(builtin_map(BuiltinMap::kPsi, 2).image(0, 0) == ComplexMatrix{{0, 0}, {0, 1}});
  CHECK(builtin_map(BuiltinMap::kPhi, 2).image(0, 1) == e(0, 1));
  CHECK(builtin_map(BuiltinMap::kTraceMap, 3).k() == 1);

  std::mt19937_64 gen(21);
  const LinearMap phi = builtin_map(BuiltinMap::kPhi, 3);
  const LinearMap psi = builtin_map(BuiltinMap::kPsi, 3);
  const LinearMap tr = builtin_map(BuiltinMap::kTraceMap, 3);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix x = oracle::random_matrix(3, 3, gen);
    Complex trx = 0.0;
    for (std::size_t i = 0; i < 3; ++i) trx += x(i, i);
    const ComplexMatrix phi_ref = trx * ComplexMatrix::identity(3) + x;
    const ComplexMatrix psi_ref = trx * ComplexMatrix::identity(3) - x;
    CHECK(oracle::max_abs_diff(apply_map(phi, x), phi_ref) <= 1e-12 * frobenius_norm(phi_ref));
    CHECK(oracle::max_abs_diff(apply_map(psi, x), psi_ref) <= 1e-12 * frobenius_norm(psi_ref));
    CHECK(std::abs(apply_map(tr, x)(0, 0) - trx) <= 1e-12 * std::abs(trx));

    // Linearity.
    const ComplexMatrix y = oracle::random_matrix(3, 3, gen);
    const Complex a{1.5, 0.5};
    const Complex b{-0.25, 2.0};
    const ComplexMatrix lhs = apply_map(phi, a * x + b * y);
    const ComplexMatrix rhs = a * apply_map(phi, x) + b * apply_map(phi, y);
    CHECK(oracle::max_abs_diff(lhs, rhs) <= 1e-12 * std::max(1.0, frobenius_norm(lhs)));
  }
  CHECK_THROWS_AS(apply_map(phi, ComplexMatrix::identity(2)), ShapeError);
}

TEST_CASE("builtin map names") {
  CHECK(parse_builtin_map("psi") == BuiltinMap::kPsi);
  CHECK(builtin_map_name(BuiltinMap::kTraceMap) == "trace_map");
  CHECK_THROWS_AS(parse_builtin_map("determinant"), UsageError);
  CHECK_THROWS_AS(builtin_map(BuiltinMap::kPhi, 0), UsageError);
}

TEST_CASE("choi_matrix") {
  const BlockMatrix id = choi_matrix(builtin_map(BuiltinMap::kIdentity, 2), 2);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
  CHECK(id.mat() == expected);

  const BlockMatrix psi = choi_matrix(builtin_map(BuiltinMap::kPsi, 2), 2);
  CHECK(psi.mat() == ComplexMatrix{{0, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 0}});
  check_spectrum(psi.mat(), {-1, 1, 1, 1});

  CHECK(choi_matrix(builtin_map(BuiltinMap::kTraceMap, 2), 2).mat() == ComplexMatrix::identity(2));
  CHECK_THROWS_AS(choi_matrix(builtin_map(BuiltinMap::kPsi, 2), 3), UsageError);
}

TEST_CASE("co_choi_matrix") {
  const BlockMatrix psi = co_choi_matrix(builtin_map(BuiltinMap::kPsi, 2));
  CHECK(psi.mat() == ComplexMatrix{{0, 0, 0, 0}, {0, 1, -1, 0}, {0, -1, 1, 0}, {0, 0, 0, 0}});
  check_spectrum(psi.mat(), {0, 0, 0, 2});

  const BlockMatrix phi = co_choi_matrix(builtin_map(BuiltinMap::kPhi, 2));
  CHECK(phi.mat() == ComplexMatrix{{2, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}});
  check_spectrum(phi.mat(), {0, 2, 2, 2});

  const BlockMatrix swap = co_choi_matrix(builtin_map(BuiltinMap::kIdentity, 2));
  CHECK(swap.mat() == ComplexMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  check_spectrum(swap.mat(), {-1, 1, 1, 1});
}

TEST_CASE("Choi consistency and co-Choi as partial transpose") {
  std::mt19937_64 gen(22);
  std::vector<ComplexMatrix> images;
  for (int k = 0; k < 9; ++k) images.push_back(oracle::random_matrix(2, 2, gen));
  const LinearMap random_map(3, 2, images);
  for (const LinearMap& phi : {random_map, builtin_map(BuiltinMap::kPhi, 4), builtin_map(BuiltinMap::kPsi, 3),
                               builtin_map(BuiltinMap::kTraceMap, 3)}) {
    const BlockMatrix choi = choi_matrix(phi, phi.n());
    CHECK(co_choi_matrix(phi) == partial_transpose(choi));
    for (std::size_t i = 0; i < phi.n(); ++i) {
      for (std::size_t j = 0; j < phi.n(); ++j) {
        CHECK(apply_map(phi, ComplexMatrix::unit(phi.n(), phi.n(), i, j)) == block_get(choi, i, j));
      }
    }
  }
}

TEST_CASE("co-Choi matrices of phi and psi are diagonally dominant") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(is_row_diagonally_dominant(co_choi_matrix(builtin_map(BuiltinMap::kPhi, n)).mat()));
    CHECK(is_row_diagonally_dominant(co_choi_matrix(builtin_map(BuiltinMap::kPsi, n)).mat()));
  }
  // The Choi matrix of psi is not.
  CHECK_FALSE(is_row_diagonally_dominant(choi_matrix(builtin_map(BuiltinMap::kPsi, 2), 2).mat()));
}

TEST_CASE("certification of builtin maps") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const LinearMap phi = builtin_map(BuiltinMap::kPhi, n);
    const LinearMap psi = builtin_map(BuiltinMap::kPsi, n);
    CHECK(certify_completely_positive(phi).certified);
    CHECK(certify_completely_copositive(phi).certified);
    CHECK(certify_completely_copositive(psi).certified);
    CHECK_FALSE(certify_completely_positive(psi).certified);
    CHECK(certify_completely_positive(builtin_map(BuiltinMap::kTraceMap, n)).certified);
    CHECK(certify_completely_copositive(builtin_map(BuiltinMap::kTraceMap, n)).certified);
    CHECK(certify_completely_positive(builtin_map(BuiltinMap::kIdentity, n)).certified);
    CHECK_FALSE(certify_completely_copositive(builtin_map(BuiltinMap::kIdentity, n)).certified);
    CHECK(certify_completely_copositive(builtin_map(BuiltinMap::kTranspose, n)).certified);
  }
  const Certificate psi2 = certify_completely_positive(builtin_map(BuiltinMap::kPsi, 2));
  CHECK(psi2.min_eig == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_FALSE(certify_completely_copositive(builtin_map(BuiltinMap::kIdentity, 2)).certified);
}

TEST_CASE("copositive_image is [Phi(A_ji)]") {
  std::mt19937_64 gen(23);
  const BlockMatrix a({3, 2}, oracle::random_matrix(6, 6, gen));
  // For the identity map the image is A^tau.
  CHECK(copositive_image(builtin_map(BuiltinMap::kIdentity, 2), a) == partial_transpose(a));
  CHECK_THROWS_AS(copositive_image(builtin_map(BuiltinMap::kIdentity, 3), a), ShapeError);
}

TEST_CASE("random_cocopositivity_witness") {
  CHECK_FALSE(random_cocopositivity_witness(builtin_map(BuiltinMap::kPsi, 2), 2, 500, 42));
  CHECK_FALSE(random_cocopositivity_witness(builtin_map(BuiltinMap::kPhi, 2), 3, 200, 7));
  CHECK_FALSE(random_cocopositivity_witness(builtin_map(BuiltinMap::kIdentity, 2), 2, 0, 42));
  CHECK_THROWS_AS(random_cocopositivity_witness(builtin_map(BuiltinMap::kIdentity, 2), 0, 10, 42), UsageError);

  const LinearMap id = builtin_map(BuiltinMap::kIdentity, 2);
  const auto witness = random_cocopositivity_witness(id, 2, 500, 42);
  REQUIRE(witness.has_value());
  CHECK(is_psd(witness->mat()).psd);
  CHECK_FALSE(is_psd(partial_transpose(*witness).mat()).psd);
  // Deterministic: same arguments, same witness.
  CHECK(*random_cocopositivity_witness(id, 2, 500, 42) == *witness);
}
