#include "kga/modulation.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace kga {

Modulation::Modulation(int order, std::vector<QamTerm> terms)
    : order_(order),
      bits_per_symbol_(static_cast<int>(std::lround(std::log2(order)))),
      terms_(std::move(terms)) {}

Modulation Modulation::qam(int order) {
  switch (order) {
    case 4:
      return Modulation(4, {{1.0, 1.0}});
    case 64:
      // Five Q-terms; SNR scales are odd squares over 21, weights sum to 1.
      return Modulation(64, {{7.0 / 12, 1.0 / 21},
                             {1.0 / 2, 3.0 / 7},
                             {-1.0 / 12, 25.0 / 21},
                             {1.0 / 12, 81.0 / 21},
                             {-1.0 / 12, 169.0 / 21}});
    default:
      throw std::invalid_argument(
          "Modulation::qam: supported constellation sizes are 4 and 64");
  }
}

}  // namespace kga
