// Coherent states of a generalized Morse oscillator: prints the uncertainty
// product against its lower bound as Re(alpha) approaches the admissible edge.

#include <iomanip>
#include <iostream>

#include "anharmonic/anharmonic.hpp"

using namespace anharmonic;

int main() {
  const auto model = make_generalized_morse(1.2, 0.125);
  const auto bound = admissible_bound(model);
  std::cout << model.descriptor() << ", sqrt(2) Re(alpha) < " << format_real(bound.sup_re_alpha) << "\n\n";
  std::cout << std::setw(8) << "alpha" << std::setw(14) << "<x>" << std::setw(14) << "dx" << std::setw(14)
            << "dp" << std::setw(14) << "product" << std::setw(14) << "bound" << "\n";
  for (double re : {-0.4, -0.2, 0.0, 0.2, 0.4, 0.6, 0.7}) {
    const complex alpha(re, 0.1);
    if (!admissible(model, alpha)) continue;
    const auto r = verify_coherent(model, alpha, auto_grid(model, alpha));
    std::cout << std::setw(8) << format_complex(alpha) << std::setprecision(6);
    for (const char* q : {"mean_x", "delta_x", "delta_p", "product", "bound"}) {
      std::cout << std::setw(14) << r.quantity(q);
    }
    std::cout << (r.all_pass() ? "" : "  (checks failed)") << "\n";
  }
}
