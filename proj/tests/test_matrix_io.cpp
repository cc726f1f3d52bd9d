#include <doctest.h>

#include <cstring>
#include <limits>
#include <random>

#include "cocopos/errors.hpp"
#include "cocopos/matrix_io.hpp"
#include "oracles.hpp"

using namespace cocopos;

TEST_CASE("serialize identity") {
  CHECK(serialize(ComplexMatrix::identity(2)) ==
        R"({"rows":2,"cols":2,"data":[[1.0,0.0],[0.0,0.0],[0.0,0.0],[1.0,0.0]]})");
  CHECK(serialize(BlockMatrix::identity({1, 1})) == R"({"m":1,"n":1,"rows":1,"cols":1,"data":[[1.0,0.0]]})");
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_matrix(R"({"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0]]})"), ValidationError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":1,"data":[[1e999,0]]})"), Error);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"data":[[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":1,"data":[["x",0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":1,"data":[[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows":-1,"cols":1,"data":[]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix("[1, 2"), ParseError);
  CHECK_THROWS_AS(parse_block_matrix(R"({"m":2,"n":2,"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0],[1,0]]})"),
                  ValidationError);

  try {
    parse_matrix(R"({"rows":1,"cols":1})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("data") != std::string::npos);
  }
}

TEST_CASE("NaN entries are rejected by the matrix constructor") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(nan, 0.0)}), ValidationError);
}

TEST_CASE("matrix round trip is bitwise") {
  std::mt19937_64 gen(51);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix x = oracle::random_matrix(dim(gen), dim(gen), gen);
    const ComplexMatrix y = parse_matrix(serialize(x));
    REQUIRE(y.rows() == x.rows());
    REQUIRE(y.cols() == x.cols());
    CHECK(std::memcmp(x.entries().data(), y.entries().data(), x.entries().size_bytes()) == 0);
  }
}

TEST_CASE("block matrix and map round trips") {
  std::mt19937_64 gen(52);
  const BlockMatrix a({2, 3}, oracle::random_matrix(6, 6, gen));
  const BlockMatrix b = parse_block_matrix(serialize(a));
  CHECK(b.shape().m == 2);
  CHECK(b.shape().n == 3);
  CHECK(b.mat() == a.mat());

  const LinearMap psi = builtin_map(BuiltinMap::kPsi, 3);
  const LinearMap back = parse_linear_map(serialize(psi));
  CHECK(back.n() == 3);
  CHECK(back.k() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(back.image(i, j) == psi.image(i, j));
  }
  CHECK_THROWS_AS(parse_linear_map(R"({"n":1,"k":2,"basis_images":[{"rows":1,"cols":1,"data":[[1,0]]}]})"),
                  ValidationError);
}
