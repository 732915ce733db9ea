// Fits the expansion V = c0 u^2 (1 + c1 u + ...), u = (r - r_e)/r, to a Morse
// curve and reports how the residual falls with the number of terms.

#include <cmath>
#include <iostream>

#include "anharmonic/anharmonic.hpp"

using namespace anharmonic;

int main() {
  // D (1 - e^{-a (r - re)})^2 with D = 4.75, a = 1.9, re = 1.4
  std::vector<PotentialSample> data;
  for (int i = 0; i < 80; ++i) {
    const double r = 1.0 + 3.0 * i / 79.0;
    const double e = std::exp(-1.9 * (r - 1.4));
    data.push_back({r, 4.75 * (1.0 - e) * (1.0 - e)});
  }
  std::cout << "radius of convergence starts at r = "
            << format_real(convergence_radius_lower(1.4, 0.0)) << "\n";
  for (std::size_t order = 0; order <= 4; ++order) {
    const auto fit = fit_expansion(data, order);
    std::cout << "N=" << order << "  r_e=" << format_real(fit.params.r_e)
              << "  c0=" << format_real(fit.params.c0) << "  scaled_rss=" << format_real(fit.scaled_rss)
              << (fit.converged ? "" : "  (not converged)") << "\n";
  }
}
