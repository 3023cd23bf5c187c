#ifndef ELBM_CONTINUUM_HPP
#define ELBM_CONTINUUM_HPP

#include <cstddef>
#include <span>
#include <stdexcept>

#include "elbm/material.hpp"
#include "elbm/types.hpp"

namespace elbm {

// First-order kinematic estimate of the displacement divergence from the
// current density: div u ~ (rho0 - rho)/rho0.
inline double div_u_from_density(double rho, double rho0) {
  if (!(rho0 > 0.0)) throw std::invalid_argument("div_u_from_density: rho0 must be positive");
  return (rho0 - rho) / rho0;
}

// The second-moment stress tensor of the solid LBM relates to the Cauchy
// stress by sigma = -P + (lambda - mu) (div u) I. The extra term vanishes
// for Poisson solids (lambda == mu).
inline SymTensor2 cauchy_from_poisson(const SymTensor2& p, double divu, const Material& m) {
  const double d = (m.lambda - m.mu) * divu;
  return {-p.xx + d, -p.xy, -p.yy + d};
}

// Inverse of cauchy_from_poisson: P = -sigma + (lambda - mu) (div u) I.
// Rejects asymmetric input (the off-diagonal pair must match).
inline SymTensor2 poisson_from_cauchy(double sxx, double sxy, double syx, double syy,
                                      double divu, const Material& m) {
  if (!(sxy == syx))
    throw std::invalid_argument("poisson_from_cauchy: stress tensor must be symmetric");
  const double d = (m.lambda - m.mu) * divu;
  return {-sxx + d, -sxy, -syy + d};
}

inline SymTensor2 poisson_from_cauchy(const SymTensor2& s, double divu, const Material& m) {
  return poisson_from_cauchy(s.xx, s.xy, s.xy, s.yy, divu, m);
}

// Trapezoidal time integration of the velocity j/rho into a displacement.
// Histories run from t = 0 to t = n dt, aligned sample for sample.
inline Vec2 integrate_displacement(std::span<const Vec2> j_history,
                                   std::span<const double> rho_history, double dt) {
  if (j_history.size() != rho_history.size())
    throw std::invalid_argument("integrate_displacement: history lengths differ");
  Vec2 u{};
  for (std::size_t k = 1; k < j_history.size(); ++k) {
    const Vec2 v0 = j_history[k - 1] * (1.0 / rho_history[k - 1]);
    const Vec2 v1 = j_history[k] * (1.0 / rho_history[k]);
    u = u + 0.5 * dt * (v0 + v1);
  }
  return u;
}

}  // namespace elbm

#endif
