// Recover ad(a) + lambda*D from values of a W(2,2) derivation.

#include <iostream>

#include "twolocal/twolocal.hpp"

int main() {
  using namespace twolocal;

  W22Derivation hidden{L(2, Rational(3)) - I(-1, Rational(1, 2)), Rational(5, 7)};
  MapOracle oracle = MapOracle::from(hidden);

  std::vector<Element> probes;
  for (std::int64_t i = -3; i <= 3; ++i) {
    probes.push_back(L(i));
    probes.push_back(I(i));
  }
  probes.push_back(L(1) + I(-2, Rational(4)));

  DecomposeResult r = decompose_w22_two_local(oracle, 8, probes);
  std::cout << json::to_json(r).dump(2) << "\n";
  std::cout << "mu = " << r.mu << " (hidden lambda = " << hidden.outer_coeff << ")\n";
  return r.ok() ? 0 : 1;
}
