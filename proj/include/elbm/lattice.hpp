#ifndef ELBM_LATTICE_HPP
#define ELBM_LATTICE_HPP

#include <array>

#include "elbm/types.hpp"

namespace elbm {

// D2Q9 velocity set. Index 0 is the rest velocity, 1-4 are the axis
// directions (+x, +y, -x, -y) and 5-8 the diagonals, numbered so that
// opposite(i) reverses the direction (5 <-> 7, 6 <-> 8).
struct D2Q9 {
  static constexpr int kQ = 9;

  static constexpr std::array<int, kQ> ex = {0, 1, 0, -1, 0, 1, -1, -1, 1};
  static constexpr std::array<int, kQ> ey = {0, 0, 1, 0, -1, 1, 1, -1, -1};
  static constexpr std::array<int, kQ> opposite = {0, 3, 4, 1, 2, 7, 8, 5, 6};
  static constexpr std::array<double, kQ> w = {4.0 / 9.0,  1.0 / 9.0,  1.0 / 9.0,
                                               1.0 / 9.0,  1.0 / 9.0,  1.0 / 36.0,
                                               1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0};

  double dx = 0.0;   // lattice spacing
  double dt = 0.0;   // time step, fixed by the isotropy condition
  double c = 0.0;    // lattice speed dx/dt
  double cs = 0.0;   // shear wave speed = c/sqrt(3)
  double cs2 = 0.0;
  double cs4 = 0.0;

  // physical velocity components c_i = (ex, ey) * c
  std::array<double, kQ> cx{};
  std::array<double, kQ> cy{};
  // second-order stencil q_i = c_i (x) c_i - cs^2 I, used by the
  // equilibrium and the anti-bounce-back rule
  std::array<double, kQ> qxx{};
  std::array<double, kQ> qxy{};
  std::array<double, kQ> qyy{};

  Vec2 velocity(int i) const { return {cx[i], cy[i]}; }
  double link_length(int i) const;
};

// Constructs the lattice for a given spacing and shear wave speed,
// choosing dt = dx / (sqrt(3) cs) so that cs^2 = c^2/3.
// Throws std::invalid_argument for non-positive inputs.
D2Q9 build_d2q9(double dx, double shear_speed);

}  // namespace elbm

#endif
