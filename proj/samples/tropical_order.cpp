// How the valuation and the weight pick leading terms.

#include <iostream>

#include "tropf5/tropf5.hpp"

using namespace tropf5;

namespace {

void show(const PolyRing<RationalField>& ring, const std::vector<std::pair<mpq_class, Monomial>>& terms) {
  const auto f = ring.from_rational_terms(terms);
  std::cout << "  " << ring.to_string(f) << "    LT = " << ring.field().to_string(f.leading_term().coeff) << "*"
            << ring.monomial_to_string(f.leading_monomial()) << "\n";
}

}  // namespace

int main() {
  const std::vector<std::string> names{"x", "y", "z"};
  const std::vector<std::pair<mpq_class, Monomial>> f{{2, {1, 0, 0}}, {1, {0, 1, 0}}, {12, {0, 0, 1}}};

  RationalField plain(Valuation::trivial());
  RationalField two(Valuation::padic(2));
  RationalField three(Valuation::padic(3));

  std::cout << "trivial valuation, w = 0 (plain grevlex):\n";
  show(PolyRing<RationalField>(plain, TropicalOrder::zero_weight(3), names), f);
  std::cout << "2-adic, w = 0 (val(2) = 1 pushes 2x below y):\n";
  show(PolyRing<RationalField>(two, TropicalOrder::zero_weight(3), names), f);
  std::cout << "3-adic, w = 0 (12 = 3*4 has valuation 1):\n";
  show(PolyRing<RationalField>(three, TropicalOrder::zero_weight(3), names), f);
  std::cout << "2-adic, w = (1,-3,2) (val + w.a: 2, -3, 4):\n";
  show(PolyRing<RationalField>(two, TropicalOrder({1, -3, 2}, Tiebreak::grevlex), names), f);
  std::cout << "2-adic, w = (-2,0,0):\n";
  show(PolyRing<RationalField>(two, TropicalOrder({-2, 0, 0}, Tiebreak::grevlex), names), f);
}
