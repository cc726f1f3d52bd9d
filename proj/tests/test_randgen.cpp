#include <doctest.h>

#include <cmath>
#include <set>

#include "cocopos/errors.hpp"
#include "cocopos/randgen.hpp"

using namespace cocopos;

TEST_CASE("counter RNG is a pure function of key and counter") {
  const CounterRng a(7);
  const CounterRng b(7);
  const CounterRng c(8);
  CHECK(a.bits(123) == b.bits(123));
  CHECK(a.bits(123) != c.bits(123));
  CHECK(a.bits(123) != a.bits(124));
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const double u = a.uniform(k);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("complex Gaussian moments") {
  const CounterRng rng(99);
  const int draws = 200000;
  Complex mean = 0.0;
  double second = 0.0;
  Complex pseudo = 0.0;
  for (int k = 0; k < draws; ++k) {
    const Complex z = rng.complex_gaussian(k);
    mean += z;
    second += std::norm(z);
    pseudo += z * z;
  }
  mean /= draws;
  second /= draws;
  pseudo /= static_cast<double>(draws);
  // Standard errors are about 1/sqrt(draws) ~ 2.2e-3.
  CHECK(std::abs(mean) < 0.015);
  CHECK(std::abs(second - 1.0) < 0.015);
  CHECK(std::abs(pseudo) < 0.015);  // circular: E z^2 = 0
}

TEST_CASE("random_psd") {
  const ComplexMatrix one = random_psd(1, 1, 5);
  CHECK(one(0, 0).real() >= 0.0);
  CHECK(one(0, 0).imag() == 0.0);
  CHECK(random_psd(4, 2, 11) == random_psd(4, 2, 11));
  CHECK(random_psd(4, 2, 11) != random_psd(4, 2, 12));
  CHECK_THROWS_AS(random_psd(3, 0, 1), UsageError);
  CHECK_THROWS_AS(random_psd(3, 4, 1), UsageError);

  int failures = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const std::size_t dim = 1 + s % 6;
    const std::size_t rank = 1 + s % dim;
    const ComplexMatrix a = random_psd(dim, rank, s);
    if (a != conj_transpose(a)) ++failures;
    if (min_eigenvalue(a) < -1e-10 * std::max(1.0, frobenius_norm(a))) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("random_psd rank") {
  // A rank-r Gram matrix has dim - r (numerically) zero eigenvalues.
  const ComplexMatrix a = random_psd(6, 2, 3);
  const std::vector<double> v = hermitian_eigenvalues(a).values;
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(v[k]) < 1e-10 * frobenius_norm(a));
  CHECK(v[4] > 1e-3);
}

TEST_CASE("random_separable") {
  const BlockMatrix one = random_separable(2, 3, 1, 17);
  CHECK(is_ppt(one).ppt);
  CHECK(one == random_separable(2, 3, 1, 17));

  int failures = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const std::size_t m = 1 + s % 3;
    const std::size_t n = 1 + (s / 3) % 3;
    if (!is_ppt(random_separable(m, n, 1 + s % 4, s), 1e-9).ppt) ++failures;
  }
  CHECK(failures == 0);
  CHECK_THROWS_AS(random_separable(2, 2, 0, 1), UsageError);
}

TEST_CASE("random_separable trace is the sum of product traces") {
  // Rebuild the terms from the documented sub-seed layout.
  const std::uint64_t seed = 23;
  const std::size_t terms = 3;
  Complex expected = 0.0;
  for (std::size_t t = 0; t < terms; ++t) {
    const std::uint64_t ts = derive_seed(seed, t);
    expected += trace(random_psd(2, 2, derive_seed(ts, 0))) * trace(random_psd(3, 3, derive_seed(ts, 1)));
  }
  const Complex got = trace(random_separable(2, 3, terms, seed).mat());
  CHECK(std::abs(got - expected) <= 1e-10 * std::abs(expected));
}

TEST_CASE("random_ppt") {
  std::size_t accepted = 0;
  std::size_t attempts = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const PptSample sample = random_ppt(2, 2, s);
    CHECK(is_ppt(sample.matrix).ppt);
    accepted += sample.from_fallback ? 0 : 1;
    attempts += sample.attempts;
  }
  // Full-rank 2x2 Wishart draws are PPT often enough that rejection
  // sampling essentially never falls back.
  CHECK(accepted >= 95);
  MESSAGE("mean rejection attempts for (2,2): " << static_cast<double>(attempts) / 100.0);

  const PptSample trivial = random_ppt(1, 4, 3);
  CHECK_FALSE(trivial.from_fallback);
  CHECK(trivial.attempts == 1);

  // With one attempt, some seed must reject and take the separable path.
  bool saw_fallback = false;
  for (std::uint64_t s = 0; s < 200 && !saw_fallback; ++s) {
    const PptSample sample = random_ppt(3, 3, s, 1);
    if (sample.from_fallback) {
      saw_fallback = true;
      CHECK(is_ppt(sample.matrix).ppt);
    }
  }
  CHECK(saw_fallback);
  CHECK_THROWS_AS(random_ppt(2, 2, 1, 0), UsageError);
}

TEST_CASE("generate dispatches on GenSpec") {
  GenSpec spec;
  spec.kind = GenKind::kLowRank;
  spec.m = 2;
  spec.n = 3;
  spec.rank_or_terms = 2;
  spec.seed = 9;
  const BlockMatrix a = generate(spec);
  CHECK(a.shape() == BlockShape{2, 3});
  CHECK(a.mat() == random_psd(6, 2, 9));
  CHECK(generate(spec) == a);
  spec.kind = GenKind::kPptRejection;
  CHECK(is_ppt(generate(spec)).ppt);
  CHECK(parse_gen_kind("separable") == GenKind::kSeparable);
  CHECK(gen_kind_name(GenKind::kGramPsd) == "gram_psd");
  CHECK_THROWS_AS(parse_gen_kind("wishart"), UsageError);
}
