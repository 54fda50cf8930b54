// Scans Werner states p|singlet><singlet| + (1-p) I/4 with the Pauli local
// uncertainty test and reports where detection starts. Also compares the certified
// bound for spin-1 angular momentum components with the oracle minimum.
#include <cstdio>

#include "vurkit/vurkit.hpp"

using namespace vurkit;

namespace {

QuantumState werner(double p) {
  const ComplexMatrix rho = p * fixtures::singlet().to_density() + (1.0 - p) * fixtures::maximally_mixed_2q().density_matrix();
  return QuantumState::density(rho);
}

std::vector<SpectralObservable> spin1() {
  const double r = 1.0 / std::sqrt(2.0);
  const complex i(0.0, 1.0);
  const ComplexMatrix jx{{0.0, r, 0.0}, {r, 0.0, r}, {0.0, r, 0.0}};
  const ComplexMatrix jy{{0.0, -i * r, 0.0}, {i * r, 0.0, -i * r}, {0.0, i * r, 0.0}};
  const ComplexMatrix jz{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}};
  return {eigendecompose(jx), eigendecompose(jy), eigendecompose(jz)};
}

} // namespace

int main() {
  const auto pauli = fixtures::pauli3();
  std::vector<LocalObservablePair> pairs;
  for (const auto& o : pauli) pairs.push_back({o, o});

  std::printf("Werner scan, Pauli pairs\n   p      lhs     margin  verdict\n");
  double first_detected = -1.0;
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    const auto r = lur_test_auto(pairs, werner(p));
    if (r.verdict == LurVerdict::Entangled && first_detected < 0.0) first_detected = p;
    std::printf("%5.2f %8.4f %10.4f  %s\n", p, r.lhs, r.margin, std::string(to_string(r.verdict)).c_str());
  }
  std::printf("first detected at p = %.2f\n\n", first_detected);

  const auto spin = spin1();
  const auto c = best_entropic_constant(spin);
  const auto b = optimize_alpha(spin, c);
  const auto m = minimize_variance_sum(spin);
  std::printf("spin-1 Jx, Jy, Jz\n  C = %.6f (%s)\n  bound = %.6f at alpha = %.4f\n  oracle minimum = %.6f\n",
              c.value(), std::string(to_string(c.source())).c_str(), b.lower_bound, b.alpha.value(), m.minimum);
  return 0;
}
