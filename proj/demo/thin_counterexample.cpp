// A 2-local-shaped map on the thin algebra that is homogeneous but not additive.

#include <iostream>

#include "twolocal/twolocal.hpp"

int main() {
  using namespace twolocal;

  ThinTwoLocalMap m{{}, {{Rational(1), Rational(1)}, Rational(2), 3}};
  const Element x = e(1) + e(2);
  const Element y = -e(1) - e(2) + e(3, 2);

  std::cout << "Delta(" << x << ") = " << evaluate(m, x) << "\n";
  std::cout << "Delta(" << y << ") = " << evaluate(m, y) << "\n";
  std::cout << "Delta(x + y) = " << evaluate(m, x + y) << "\n";
  std::cout << "Delta(x) + Delta(y) = " << evaluate(m, x) + evaluate(m, y) << "\n";

  // Each value on its own is the value of some derivation.
  for (const Element& p : {x, y}) {
    auto w = witness_find(AlgebraId::Thin, p, evaluate(m, p), e(1), evaluate(m, e(1)), 8);
    std::cout << "witness at (" << p << ", e[1]): "
              << (w ? json::to_json(w->derivation).dump() : std::string("none")) << "\n";
  }
}
