#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "test_oracles.hpp"
#include "vurkit/core/fixtures.hpp"
#include "vurkit/random.hpp"
#include "vurkit/vur.hpp"

using namespace vurkit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> random_spectrum(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> e(n);
  for (auto& x : e) x = g(rng);
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<std::vector<double>> spectra_of(const std::vector<SpectralObservable>& obs) {
  std::vector<std::vector<double>> out;
  for (const auto& o : obs) out.push_back(o.eigenvalues());
  return out;
}

} // namespace

TEST_CASE("Alpha rejects nonpositive and non-finite values", "[vur]") {
  CHECK_THROWS_AS(Alpha(0.0), DomainError);
  CHECK_THROWS_AS(Alpha(-1.0), DomainError);
  CHECK_THROWS_AS(Alpha(INFINITY), DomainError);
  CHECK_THROWS_AS(Alpha(std::nan("")), DomainError);
  CHECK(Alpha(1e-300).value() == 1e-300);
}

TEST_CASE("gaussian_sum values", "[vur]") {
  const std::vector<double> qubit{-1.0, 1.0}, qutrit{-1.0, 0.0, 1.0};
  CHECK_THAT(gaussian_sum(qubit, Alpha(0.597), 0.0), WithinAbs(2.0 * std::exp(-0.597), 1e-15));
  CHECK_THAT(gaussian_sum(qubit, Alpha(0.597), 0.0), WithinAbs(1.100921, 1e-6));
  CHECK_THAT(gaussian_sum(qutrit, Alpha(1.92), 0.0), WithinAbs(1.293214, 1e-6));
  CHECK(gaussian_sum(qubit, Alpha(1.0), -1.0) == 1.0 + std::exp(-4.0));
  CHECK_THROWS_AS(gaussian_sum(std::vector<double>{}, Alpha(1.0), 0.0), DomainError);
}

TEST_CASE("inner maximization examples", "[vur]") {
  const std::vector<double> qubit{-1.0, 1.0};
  // below alpha = 1/2 the two Gaussians merge into one peak at the midpoint
  auto r = inner_max(qubit, Alpha(0.1));
  CHECK_THAT(r.value, WithinAbs(2.0 * std::exp(-0.1), 1e-14));
  CHECK_THAT(r.beta_star, WithinAbs(0.0, 1e-6));
  r = inner_max(qubit, Alpha(0.597));
  CHECK_THAT(r.value, WithinAbs(1.126324, 1e-6));
  CHECK_THAT(std::abs(r.beta_star), WithinAbs(0.6515, 1e-3));
  CHECK(r.bracket_lo == -1.0);
  CHECK(r.bracket_hi == 1.0);

  r = inner_max(std::vector<double>{2.0, 2.0}, Alpha(3.0));
  CHECK(r.value == 2.0);
  CHECK(r.beta_star == 2.0);
  r = inner_max(std::vector<double>{5.0}, Alpha(3.0));
  CHECK(r.value == 1.0);

  CHECK_THROWS_AS(inner_max(std::vector<double>{1.0, 0.0}, Alpha(1.0)), DomainError);
  CHECK_THROWS_AS(inner_max(std::vector<double>{}, Alpha(1.0)), DomainError);
}

TEST_CASE("inner_max agrees with a dense grid", "[vur][property]") {
  Rng rng = derive_rng(101, 0);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = random_spectrum(dim(rng), rng);
    const double alpha = sample_log_uniform(1e-2, 1e2, rng);
    const double got = inner_max(e, Alpha(alpha)).value;
    const double grid = oracles::dense_grid_max(e, alpha, 100000);
    INFO("trial " << trial << " alpha " << alpha);
    CHECK(got >= grid - 1e-12);
    CHECK(got - grid <= 1e-6);
    CHECK(got <= static_cast<double>(e.size()));
    CHECK(got >= 1.0);
  }
}

TEST_CASE("inner_max is translation and reflection invariant", "[vur][property]") {
  Rng rng = derive_rng(103, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto e = random_spectrum(2 + trial % 6, rng);
    const Alpha alpha(sample_log_uniform(1e-2, 1e2, rng));
    const double base = inner_max(e, alpha).value;
    std::vector<double> shifted = e, flipped;
    for (auto& x : shifted) x += 3.7;
    for (auto it = e.rbegin(); it != e.rend(); ++it) flipped.push_back(-*it);
    CHECK_THAT(inner_max(shifted, alpha).value, WithinAbs(base, 1e-10));
    CHECK_THAT(inner_max(flipped, alpha).value, WithinAbs(base, 1e-10));
  }
}

TEST_CASE("single-observable bound is tight for sigma_x on |0>", "[vur]") {
  const auto sx = eigendecompose(fixtures::pauli_x());
  const auto ket0 = QuantumState::pure({1.0, 0.0});
  // H = ln 2, <sigma_x> = 0: (ln 2 - ln(2/e)) / 1 = 1 = V
  CHECK_THAT(lemma_bound(sx, ket0, Alpha(1.0)), WithinAbs(1.0, 1e-14));
  CHECK_THAT(variance(sx, ket0), WithinAbs(1.0, 1e-15));
}

TEST_CASE("fixed-alpha bounds for the worked examples", "[vur]") {
  const auto pauli = fixtures::pauli3();
  const auto rep = bound_at_alpha(pauli, Alpha(0.597), wu_full_mub(2));
  CHECK_THAT(rep.raw, WithinAbs(1.7243145, 1e-6));
  CHECK_FALSE(rep.clamped);
  CHECK(rep.lower_bound == rep.raw);
  REQUIRE(rep.per_operator.size() == 3);
  for (const auto& p : rep.per_operator) CHECK_THAT(p.value, WithinAbs(1.126324, 1e-6));

  const auto q = bound_at_alpha(fixtures::qutrit4(), Alpha(1.92), wu_full_mub(3));
  CHECK_THAT(q.raw, WithinAbs(0.9083680, 1e-6));
  CHECK(q.per_operator.size() == 4);

  CHECK_THAT(raw_bound(pauli, Alpha(0.597), 2.0 * std::log(2.0)), WithinAbs(rep.raw, 1e-15));
  CHECK_THROWS_AS(bound_at_alpha({}, Alpha(1.0), user_constant(0.0)), DomainError);
}

TEST_CASE("a bound that would be negative is clamped to zero", "[vur]") {
  const auto sz = eigendecompose(fixtures::pauli_z());
  const auto rep = bound_at_alpha({sz}, Alpha(1.0), user_constant(0.0));
  CHECK(rep.raw < 0.0);
  CHECK(rep.clamped);
  CHECK(rep.lower_bound == 0.0);
}

TEST_CASE("alpha optimization matches a brute-force supremum", "[vur][property]") {
  const auto check = [](const std::vector<SpectralObservable>& obs, const EntropicConstant& c) {
    const auto rep = optimize_alpha(obs, c);
    const double brute = oracles::brute_alpha_sup(spectra_of(obs), c.value());
    CHECK_THAT(rep.raw, WithinAbs(brute, 1e-6));
    return rep;
  };
  const auto p = check(fixtures::pauli3(), wu_full_mub(2));
  CHECK_THAT(p.alpha.value(), WithinRel(0.597, 0.01));
  const auto q = check(fixtures::qutrit4(), wu_full_mub(3));
  CHECK_THAT(q.alpha.value(), WithinRel(1.92, 0.01));

  Rng rng = derive_rng(107, 0);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<SpectralObservable> obs;
    for (int k = 0; k < 3; ++k) obs.push_back(eigendecompose(sample_random_hermitian(3, rng)));
    check(obs, best_entropic_constant(obs));
  }
}

TEST_CASE("optimized bound dominates every fixed alpha", "[vur][property]") {
  const auto pauli = fixtures::pauli3();
  const auto c = wu_full_mub(2);
  const double best = optimize_alpha(pauli, c).raw;
  for (int k = 0; k <= 60; ++k) {
    const double alpha = std::exp(std::log(1e-3) + (std::log(1e3) - std::log(1e-3)) * k / 60.0);
    CHECK(raw_bound(pauli, Alpha(alpha), c.value()) <= best + 1e-12);
  }
  CHECK_THROWS_AS(optimize_alpha(pauli, c, {1.0, 0.5, 200}), DomainError);
  CHECK_THROWS_AS(optimize_alpha(pauli, c, {1.0, 2.0, 2}), DomainError);
}

TEST_CASE("state-independent bound never exceeds the variance sum", "[vur][property]") {
  Rng rng = derive_rng(109, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<SpectralObservable> obs;
    for (int k = 0; k < 2 + trial % 2; ++k) obs.push_back(eigendecompose(sample_random_hermitian(n, rng)));
    const auto c = best_entropic_constant(obs);
    const double bound = optimize_alpha(obs, c, {1e-2, 1e2, 60}).lower_bound;
    for (int s = 0; s < 50; ++s) {
      const auto st = sample_random_pure(n, rng);
      CHECK(variance_sum(obs, st) >= bound - 1e-9);
      const Alpha alpha(sample_log_uniform(1e-2, 1e2, rng));
      CHECK(variance_sum(obs, st) >= state_dependent_bound(obs, st, alpha, c) - 1e-9);
    }
  }
}

TEST_CASE("continuous pair bound", "[vur]") {
  using std::numbers::pi;
  const double c = 1.0 + std::log(pi);
  const auto fixed = continuous_pair_bound({c, Alpha(1.0)});
  CHECK(fixed.alpha_used == 1.0);
  CHECK_THAT(fixed.lower_bound, WithinAbs(1.0, 1e-12));
  const auto best = continuous_pair_bound({c, std::nullopt});
  CHECK_THAT(best.alpha_used, WithinAbs(1.0, 1e-12));
  CHECK_THAT(best.lower_bound, WithinAbs(1.0, 1e-12));
  for (double c2 : {-1.0, 0.0, 0.5, 2.0, 4.0}) {
    const auto b = continuous_pair_bound({c2, std::nullopt});
    CHECK_THAT(continuous_pair_bound({c2, Alpha(b.alpha_used)}).lower_bound, WithinRel(b.lower_bound, 1e-12));
    for (double f : {0.5, 0.9, 1.1, 2.0})
      CHECK(continuous_pair_bound({c2, Alpha(f * b.alpha_used)}).lower_bound < b.lower_bound);
  }
  CHECK_THROWS_AS(continuous_pair_bound({INFINITY, std::nullopt}), DomainError);
}

TEST_CASE("Shannon variance bound", "[vur]") {
  using std::numbers::pi;
  // a Gaussian of variance s2 has differential entropy ln(2 pi e s2)/2 and saturates
  for (double s2 : {0.01, 0.5, 1.0, 7.0})
    CHECK_THAT(shannon_variance_bound(0.5 * std::log(2.0 * pi * std::numbers::e * s2)), WithinRel(s2, 1e-12));
  // with H(x) + H(p) = ln(pi e) the product of the two bounds is 1/4 whatever the split
  for (double hx : {-1.0, 0.0, 0.3, 1.0, 2.5})
    CHECK_THAT(shannon_variance_bound(hx) * shannon_variance_bound(std::log(pi * std::numbers::e) - hx),
               WithinAbs(0.25, 1e-12));
  CHECK_THROWS_AS(shannon_variance_bound(std::nan("")), DomainError);
}
