#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace hermitia {

/// A fourth root of unity i^k, k in {0,1,2,3}. Multiplication is addition
/// of exponents mod 4, so the whole group fits in two bits.
class Unit {
 public:
  constexpr Unit() = default;

  static constexpr Unit one() { return Unit(0); }
  static constexpr Unit i() { return Unit(1); }
  static constexpr Unit minus_one() { return Unit(2); }
  static constexpr Unit minus_i() { return Unit(3); }
  static constexpr Unit from_power(int k) { return Unit(static_cast<std::uint8_t>(((k % 4) + 4) % 4)); }

  constexpr int power() const { return k_; }
  constexpr Unit conj() const { return Unit(static_cast<std::uint8_t>((4 - k_) % 4)); }
  constexpr bool is_real() const { return k_ % 2 == 0; }

  friend constexpr Unit operator*(Unit a, Unit b) { return Unit(static_cast<std::uint8_t>((a.k_ + b.k_) % 4)); }
  Unit& operator*=(Unit b) { return *this = *this * b; }
  friend constexpr Unit operator-(Unit a) { return a * minus_one(); }
  friend constexpr bool operator==(Unit, Unit) = default;
  friend constexpr auto operator<=>(Unit a, Unit b) { return a.k_ <=> b.k_; }

  /// One of "1", "i", "-1", "-i".
  std::string_view token() const;
  static std::optional<Unit> parse(std::string_view token);

  std::complex<double> to_complex() const;

 private:
  explicit constexpr Unit(std::uint8_t k) : k_(k) {}
  std::uint8_t k_ = 0;
};

inline constexpr std::array<Unit, 4> kAllUnits = {Unit::one(), Unit::i(), Unit::minus_one(), Unit::minus_i()};

}  // namespace hermitia
