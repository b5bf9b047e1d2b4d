#pragma once

#include <cmath>
#include <filesystem>
#include <string>

#include "igm/prm.hpp"

namespace igm::test {

inline PairwiseReciprocalMatrix a1() {
  return validate_prm(Matrix{{1, 2, 4, 8}, {1.0 / 2, 1, 2, 4}, {1.0 / 4, 1.0 / 2, 1, 2}, {1.0 / 8, 1.0 / 4, 1.0 / 2, 1}});
}

inline PairwiseReciprocalMatrix a2() {
  return validate_prm(Matrix{{1, 4, 3, 1, 3, 4},
                             {1.0 / 4, 1, 7, 3, 1.0 / 5, 1},
                             {1.0 / 3, 1.0 / 7, 1, 1.0 / 5, 1.0 / 5, 1.0 / 6},
                             {1, 1.0 / 3, 5, 1, 1, 1.0 / 3},
                             {1.0 / 3, 5, 5, 1, 1, 3},
                             {1.0 / 4, 1, 6, 3, 1.0 / 3, 1}});
}

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(IGM_TEST_DATA_DIR) / name;
}

/// Half-away-from-zero rounding to `places` decimals.
inline double round_dp(double x, int places) {
  const double s = std::pow(10.0, places);
  return std::round(x * s) / s;
}

}  // namespace igm::test
