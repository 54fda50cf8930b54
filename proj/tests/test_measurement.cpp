#include <catch2/catch_amalgamated.hpp>

#include "vurkit/core/fixtures.hpp"
#include "vurkit/core/measurement.hpp"
#include "vurkit/random.hpp"

using namespace vurkit;
using Catch::Matchers::WithinAbs;

namespace {
const auto sx = eigendecompose(fixtures::pauli_x());
const auto sy = eigendecompose(fixtures::pauli_y());
const auto sz = eigendecompose(fixtures::pauli_z());
const auto ket0 = QuantumState::pure({1.0, 0.0});
const auto mixed = QuantumState::maximally_mixed(2);
} // namespace

TEST_CASE("expectation examples", "[measurement]") {
  CHECK_THAT(expectation(sz, ket0), WithinAbs(1.0, 1e-15));
  CHECK_THAT(expectation(sx, ket0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(expectation(sz, mixed), WithinAbs(0.0, 1e-15));
}

TEST_CASE("variance examples", "[measurement]") {
  CHECK_THAT(variance(sz, ket0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(variance(sx, ket0), WithinAbs(1.0, 1e-14));
  CHECK_THAT(variance(sz, mixed), WithinAbs(1.0, 1e-14));
}

TEST_CASE("measurement distributions in ascending-eigenvalue order", "[measurement]") {
  auto p = measurement_distribution(sz, ket0);
  CHECK_THAT(p[0], WithinAbs(0.0, 1e-15));
  CHECK_THAT(p[1], WithinAbs(1.0, 1e-15));
  p = measurement_distribution(sx, ket0);
  CHECK_THAT(p[0], WithinAbs(0.5, 1e-15));
  CHECK_THAT(p[1], WithinAbs(0.5, 1e-15));
  p = measurement_distribution(sz, mixed);
  CHECK_THAT(p[0], WithinAbs(0.5, 1e-15));
  CHECK_THAT(p[1], WithinAbs(0.5, 1e-15));
}

TEST_CASE("dimension mismatches throw", "[measurement]") {
  const auto q = QuantumState::pure({1.0, 0.0, 0.0});
  CHECK_THROWS_AS(expectation(sz, q), DimensionError);
  CHECK_THROWS_AS(variance(sz, q), DimensionError);
  CHECK_THROWS_AS(measurement_distribution(sz, q), DimensionError);
  CHECK_THROWS_AS(overlap_stats(sz, fixtures::qutrit4()[0]), DimensionError);
  CHECK_THROWS_AS(robertson_bound(sx, sy, q), DimensionError);
}

TEST_CASE("shannon entropy", "[measurement]") {
  CHECK(shannon_entropy(std::vector<double>{1.0, 0.0}) == 0.0);
  CHECK_THAT(shannon_entropy(std::vector<double>{0.5, 0.5}), WithinAbs(std::log(2.0), 1e-15));
  CHECK_THAT(shannon_entropy(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}), WithinAbs(std::log(3.0), 1e-15));
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{1.2, -0.2}), DomainError);
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{0.5, 0.4}), DomainError);
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{}), DomainError);
}

TEST_CASE("overlap statistics", "[measurement]") {
  CHECK_THAT(overlap_stats(sz, sz).c, WithinAbs(1.0, 1e-15));
  CHECK_THAT(overlap_stats(sz, sx).c, WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  const auto q = fixtures::qutrit4();
  CHECK_THAT(overlap_stats(q[0], q[1]).c, WithinAbs(1.0 / std::sqrt(3.0), 1e-12));
}

TEST_CASE("mutual unbiasedness", "[measurement]") {
  CHECK(is_mub({sx, sy, sz}));
  CHECK_FALSE(is_mub({sz, sz}));
  CHECK(is_mub(fixtures::qutrit4()));
  CHECK_FALSE(fixtures::try_qutrit4(fixtures::QutritPhases::ThirdsOfPi).has_value());
  CHECK_THROWS_AS(is_mub({sz}), DomainError);
}

TEST_CASE("robertson bound examples", "[measurement]") {
  CHECK_THAT(robertson_bound(sx, sy, ket0), WithinAbs(1.0, 1e-14));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK_THAT(robertson_bound(sx, sy, QuantumState::pure({r, r})), WithinAbs(0.0, 1e-14));
  CHECK_THAT(robertson_bound(sz, sz, ket0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(robertson_bound(sz, sz, mixed), WithinAbs(0.0, 1e-15));
}

TEST_CASE("state validation", "[measurement]") {
  CHECK_THROWS_AS(QuantumState::pure({1.0, 1.0}), InvalidStateError);
  CHECK_THROWS_AS(QuantumState::density(ComplexMatrix{{0.5, 0.0}, {0.0, 0.6}}), InvalidStateError);
  CHECK_THROWS_AS(QuantumState::density(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), InvalidStateError);
  CHECK_THROWS_AS(QuantumState::density(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}), InvalidStateError);
  CHECK_NOTHROW(QuantumState::density(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}));
}

TEST_CASE("random states: Robertson, two variance routes, doubly stochastic overlaps", "[measurement][property]") {
  Rng rng = derive_rng(99, 1);
  double worst_robertson = INFINITY;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto a = eigendecompose(sample_random_hermitian(n, rng));
    const auto b = eigendecompose(sample_random_hermitian(n, rng));
    const auto st = sample_random_pure(n, rng);

    const double va = variance(a, st), vb = variance(b, st);
    worst_robertson = std::min(worst_robertson, std::sqrt(va * vb) - robertson_bound(a, b, st));

    // raw moments from the matrix route
    const ComplexMatrix ma = a.matrix();
    const double m1 = st.expect(ma).real(), m2 = st.expect(ma * ma).real();
    CHECK_THAT(va, WithinAbs(m2 - m1 * m1, 1e-10));

    const double mu = expectation(a, st);
    CHECK(mu >= a.min_eigenvalue());
    CHECK(mu <= a.max_eigenvalue());

    const auto s = overlap_stats(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row += s.overlap[i][j] * s.overlap[i][j];
        col += s.overlap[j][i] * s.overlap[j][i];
      }
      CHECK_THAT(row, WithinAbs(1.0, 1e-9));
      CHECK_THAT(col, WithinAbs(1.0, 1e-9));
    }
    const auto p = measurement_distribution(a, st);
    double total = 0.0;
    for (double x : p) total += x;
    CHECK_THAT(total, WithinAbs(1.0, 1e-10));
  }
  CHECK(worst_robertson >= -1e-9);
}

TEST_CASE("density-matrix route agrees with the pure route", "[measurement][property]") {
  Rng rng = derive_rng(7, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto a = eigendecompose(sample_random_hermitian(n, rng));
    const auto pure = sample_random_pure(n, rng);
    const auto rho = QuantumState::density(pure.to_density());
    CHECK_THAT(variance(a, rho), WithinAbs(variance(a, pure), 1e-12));
    CHECK_THAT(expectation(a, rho), WithinAbs(expectation(a, pure), 1e-12));
  }
}
