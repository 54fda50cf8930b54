#include <catch2/catch_amalgamated.hpp>

#include "vurkit/core/fixtures.hpp"
#include "vurkit/entropic.hpp"
#include "vurkit/random.hpp"

using namespace vurkit;
using Catch::Matchers::WithinAbs;

namespace {

const auto sx = eigendecompose(fixtures::pauli_x());
const auto sz = eigendecompose(fixtures::pauli_z());

/// cos(theta) sigma_z + sin(theta) sigma_x, whose eigenbasis overlaps sigma_z's with
/// c = max(|cos(theta/2)|, |sin(theta/2)|).
SpectralObservable tilted(double theta) {
  return eigendecompose(std::cos(theta) * fixtures::pauli_z() + std::sin(theta) * fixtures::pauli_x());
}

double entropy_sum(const std::vector<SpectralObservable>& obs, const QuantumState& st) {
  double h = 0.0;
  for (const auto& o : obs) h += measurement_entropy(o, st);
  return h;
}

} // namespace

TEST_CASE("Maassen-Uffink constant", "[entropic]") {
  CHECK(maassen_uffink(1.0).value() == 0.0);
  CHECK_THAT(maassen_uffink(1.0 / std::sqrt(2.0)).value(), WithinAbs(std::log(2.0), 1e-15));
  CHECK_THAT(maassen_uffink(1.0 / std::sqrt(3.0)).value(), WithinAbs(std::log(3.0), 1e-15));
  CHECK(maassen_uffink(0.5).source() == EntropicSource::MaassenUffink);
  CHECK_THROWS_AS(maassen_uffink(0.0), DomainError);
  CHECK_THROWS_AS(maassen_uffink(1.1), DomainError);
}

TEST_CASE("binary-entropy pair constant", "[entropic]") {
  CHECK(de_vicente_analytic(1.0).value() == 0.0);
  // -(1.9) ln 0.95 - 0.1 ln 0.05, evaluated independently: 0.397030487
  CHECK_THAT(de_vicente_analytic(0.9).value(), WithinAbs(0.397030, 5e-7));
  CHECK_THROWS_AS(de_vicente_analytic(1.0 / std::sqrt(2.0)), DomainError);
  CHECK_THROWS_AS(de_vicente_analytic(0.8), DomainError);
  CHECK_THROWS_AS(de_vicente_analytic(1.01), DomainError);
  // literal regime at 1/sqrt 2: 0.832991061 (direct evaluation)
  const double lit = de_vicente_analytic(1.0 / std::sqrt(2.0), DeVicenteRegime::Literal).value();
  CHECK_THAT(lit, WithinAbs(0.832991, 5e-7));
}

TEST_CASE("the literal regime overstates the qubit entropy floor at c = 1/sqrt 2", "[entropic]") {
  const auto ket0 = QuantumState::pure({1.0, 0.0});
  const double h = entropy_sum({sz, sx}, ket0);
  CHECK_THAT(h, WithinAbs(std::log(2.0), 1e-15));
  CHECK(h < de_vicente_analytic(1.0 / std::sqrt(2.0), DeVicenteRegime::Literal).value());
}

TEST_CASE("binary-entropy constant holds on its enabled regime", "[entropic][property]") {
  Rng rng = derive_rng(31, 0);
  for (double c : {0.834, 0.87, 0.9, 0.95, 0.99}) {
    const auto b = tilted(2.0 * std::acos(c));
    REQUIRE_THAT(overlap_stats(sz, b).c, WithinAbs(c, 1e-12));
    const double bound = de_vicente_analytic(c).value();
    double lowest = INFINITY;
    for (int s = 0; s < 4000; ++s) lowest = std::min(lowest, entropy_sum({sz, b}, sample_random_pure(2, rng)));
    INFO("c = " << c);
    CHECK(lowest >= bound - 1e-9);
  }
}

TEST_CASE("MUB constants", "[entropic]") {
  CHECK_THAT(wu_mub_bound(3, 2).value(), WithinAbs(2.0 * std::log(2.0), 1e-15));
  CHECK_THAT(wu_mub_bound(4, 3).value(), WithinAbs(4.0 * std::log(2.0), 1e-15));
  CHECK_THAT(wu_mub_bound(2, 2).value(), WithinAbs(std::log(2.0), 1e-15));
  CHECK_THAT(wu_full_mub(2).value(), WithinAbs(2.0 * std::log(2.0), 1e-15));
  CHECK_THAT(wu_full_mub(3).value(), WithinAbs(4.0 * std::log(2.0), 1e-15));
  CHECK_THAT(wu_full_mub(4).value(), WithinAbs(2.0 * std::log(2.0) + 3.0 * std::log(3.0), 1e-14));
  CHECK_THAT(wu_mub_bound(5, 4).value(), WithinAbs(2.0 * std::log(2.0) + 3.0 * std::log(3.0), 1e-14));
  CHECK_THROWS_AS(wu_mub_bound(1, 3), DomainError);
  CHECK_THROWS_AS(wu_mub_bound(3, 1), DomainError);
  CHECK_THROWS_AS(wu_full_mub(1), DomainError);
}

TEST_CASE("complete-set formula matches the general MUB formula", "[entropic][property]") {
  for (int n = 2; n <= 20; ++n) {
    INFO("n = " << n);
    CHECK_THAT(wu_full_mub(n).value(), WithinAbs(wu_mub_bound(n + 1, n).value(), 1e-12));
  }
}

TEST_CASE("pair constants are monotone and vanish at c = 1", "[entropic][property]") {
  double prev_mu = INFINITY, prev_dv = INFINITY;
  for (int k = 0; k <= 200; ++k) {
    const double c = 0.834 + (1.0 - 0.834) * k / 200.0;
    const double mu = maassen_uffink(c).value(), dv = de_vicente_analytic(c).value();
    CHECK(mu <= prev_mu);
    CHECK(dv <= prev_dv);
    prev_mu = mu;
    prev_dv = dv;
  }
  for (int k = 1; k <= 100; ++k) {
    const double c = k / 100.0;
    CHECK(maassen_uffink(c).value() >= maassen_uffink(std::min(1.0, c + 0.01)).value());
  }
  CHECK(prev_mu == 0.0);
  CHECK(prev_dv == 0.0);
}

TEST_CASE("Maassen-Uffink holds on random observable pairs", "[entropic][property]") {
  Rng rng = derive_rng(41, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto a = eigendecompose(sample_random_hermitian(n, rng));
    const auto b = eigendecompose(sample_random_hermitian(n, rng));
    const auto st = sample_random_pure(n, rng);
    const double c = std::min(1.0, overlap_stats(a, b).c);
    CHECK(entropy_sum({a, b}, st) >= maassen_uffink(c).value() - 1e-9);
  }
}

TEST_CASE("sigma_z / sigma_x entropy sum approaches but never passes ln 2", "[entropic][property]") {
  Rng rng = derive_rng(43, 0);
  double lowest = INFINITY;
  for (int s = 0; s < 10000; ++s) lowest = std::min(lowest, entropy_sum({sz, sx}, sample_random_pure(2, rng)));
  CHECK(lowest >= std::log(2.0) - 1e-12);
  CHECK(lowest <= std::log(2.0) + 0.05);
}

TEST_CASE("best_entropic_constant selection", "[entropic]") {
  const auto pauli = fixtures::pauli3();
  auto c = best_entropic_constant(pauli);
  CHECK(c.source() == EntropicSource::WuMub);
  CHECK_THAT(c.value(), WithinAbs(2.0 * std::log(2.0), 1e-15));

  c = best_entropic_constant({sz, sx});
  CHECK(c.source() == EntropicSource::MaassenUffink);
  CHECK_THAT(c.value(), WithinAbs(std::log(2.0), 1e-15));

  c = best_entropic_constant({sz, sz});
  CHECK(c.value() == 0.0);

  c = best_entropic_constant(fixtures::qutrit4());
  CHECK(c.source() == EntropicSource::WuMub);
  CHECK_THAT(c.value(), WithinAbs(4.0 * std::log(2.0), 1e-15));

  // nearly aligned bases: the binary-entropy constant beats Maassen-Uffink
  c = best_entropic_constant({sz, tilted(2.0 * std::acos(0.95))});
  CHECK(c.source() == EntropicSource::DeVicenteAnalytic);
  CHECK_THAT(c.value(), WithinAbs(de_vicente_analytic(0.95).value(), 1e-12));

  CHECK_THROWS_AS(best_entropic_constant({sz}), DomainError);
  CHECK_THROWS_AS(best_entropic_constant({sz, fixtures::qutrit4()[0]}), DimensionError);
}

TEST_CASE("pair matching for sets that are not mutually unbiased", "[entropic]") {
  // edges: (0,1), (0,3), (1,2), (2,3) score ln 2, the rest 0; greedy takes (0,1) then (2,3)
  const auto c = best_entropic_constant({sz, sx, sz, sx});
  CHECK(c.source() == EntropicSource::PairwiseMatching);
  CHECK_THAT(c.value(), WithinAbs(2.0 * std::log(2.0), 1e-15));

  Rng rng = derive_rng(47, 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SpectralObservable> obs;
    for (int k = 0; k < 5; ++k) obs.push_back(eigendecompose(sample_random_hermitian(3, rng)));
    const auto cc = best_entropic_constant(obs);
    REQUIRE(cc.source() == EntropicSource::PairwiseMatching);
    const auto st = sample_random_pure(3, rng);
    CHECK(entropy_sum(obs, st) >= cc.value() - 1e-9);
  }
}

TEST_CASE("entropic constant invariants", "[entropic]") {
  CHECK_THROWS_AS(user_constant(-0.1), DomainError);
  CHECK_THROWS_AS(user_constant(std::nan("")), DomainError);
  CHECK_THROWS_AS(user_constant(2.0, 2, 2), DomainError);  // above 2 ln 2
  CHECK_NOTHROW(user_constant(2.0 * std::log(2.0), 2, 2));
  CHECK(user_constant(0.3).source() == EntropicSource::UserSupplied);
}
