// Tropical Groebner basis of homogenized Katsura-3 over Q with the 2-adic
// valuation, checked against the Macaulay-matrix oracle.

#include <iostream>

#include "tropf5/tropf5.hpp"

using namespace tropf5;

int main() {
  const SystemFile sys = homogenized(katsura(3));
  RationalField field(Valuation::padic(2));
  PolyRing<RationalField> ring(field, system_order(sys), sys.vars);
  const auto gens = system_polynomials(ring, sys);
  const auto span = std::span<const Polynomial<mpq_class>>(gens);

  const auto st = f5_incremental(ring, span);
  for (const auto& g : st.basis)
    std::cout << signature_to_string(g.sig, ring) << " : " << ring.monomial_to_string(g.poly.leading_monomial())
              << "\n";

  const int bound = macaulay_bound(span);
  const auto basis = minimal_basis(st.basis);
  const auto report = verify_gb(std::span<const Polynomial<mpq_class>>(basis), oracle_gb(ring, span, bound));
  std::cout << st.basis.size() << " elements (" << basis.size() << " minimal), " << st.stats.zero_reductions
            << " zero reductions, oracle check up to degree " << bound << ": " << (report.passed() ? "pass" : "FAIL")
            << "\n";
  return report.passed() ? 0 : 1;
}
