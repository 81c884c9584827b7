// Walks through the main constructions: a transfer along F9/F3, a Witt
// decomposition over Q, the Koszul form of (x, y) and a projective vanishing.

#include <iostream>

#include "wittforge/catalog.hpp"
#include "wittforge/koszul.hpp"
#include "wittforge/projspace.hpp"
#include "wittforge/transfer.hpp"

int main() {
  using namespace wittforge;

  FieldRef f3 = Fp(3);
  FieldRef f9 = parse_field("F9");
  const ExtensionDatum ext(f3, f9);
  std::cout << "F9 = " << f9->name() << "\n";
  std::cout << "transfer <1>     = " << scharlau_transfer(ext, QuadraticForm::diagonal(f9, std::vector<long>{1})).to_string() << "\n";
  const QuadraticForm alpha = scharlau_transfer(ext, QuadraticForm::diagonal(f9, {f9->generator()}));
  std::cout << "transfer <alpha> = " << alpha.to_string() << (witt_trivial(alpha) ? "  (hyperbolic)" : "") << "\n";

  const QuadraticForm q = QuadraticForm::diagonal(Q(), std::vector<long>{1, 1, -1, -1, 2, -3});
  const WittClass c = witt_decompose(q);
  std::cout << "\n<1,1,-1,-1,2,-3> over Q: anisotropic " << c.anisotropic.to_string() << " + " << c.hyperbolic_count << " H\n";

  const KoszulDatum k = KoszulDatum::coordinates(Q(), 2);
  const SymmetricSpace s = koszul_form(k);
  std::cout << "\nKoszul complex of (x, y): " << s.carrier.to_string() << "\n";
  std::cout << "theta has symmetry sign " << s.symmetry_sign << "; x_map = theta: " << (x_map(k) == theta_map(k) ? "yes" : "no") << "\n";

  const CohomologyReport h = cohomology(2, -3, Q());
  std::cout << "\nh^*(P^2, O(-3)) = " << h.dims[0] << " " << h.dims[1] << " " << h.dims[2] << " (witness "
            << monomial_string(h.witnesses.at(2).front()) << ")\n";
  std::cout << "f_*(phi_3) = 0: " << (pushforward_phi_r(3, Q()).pushforward_zero ? "yes" : "no") << "\n";
  return 0;
}
