#include "hermitia/unit.hpp"

namespace hermitia {

std::string_view Unit::token() const {
  static constexpr std::array<std::string_view, 4> kTokens = {"1", "i", "-1", "-i"};
  return kTokens[k_];
}

std::optional<Unit> Unit::parse(std::string_view token) {
  for (Unit u : kAllUnits) {
    if (u.token() == token) {
      return u;
    }
  }
  return std::nullopt;
}

std::complex<double> Unit::to_complex() const {
  switch (k_) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace hermitia
