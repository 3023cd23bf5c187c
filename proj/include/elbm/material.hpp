#ifndef ELBM_MATERIAL_HPP
#define ELBM_MATERIAL_HPP

#include <cmath>
#include <stdexcept>

namespace elbm {

// Isotropic linear-elastic material (plane strain).
struct Material {
  double rho0 = 1.0;    // reference mass density
  double lambda = 1.0;  // first Lame parameter
  double mu = 1.0;      // shear modulus

  double cs() const { return std::sqrt(mu / rho0); }
  double cd() const { return std::sqrt((lambda + 2.0 * mu) / rho0); }
  double nu() const { return lambda / (2.0 * (lambda + mu)); }

  // Builds a material from the dilatational/shear wave speed ratio squared,
  // cd^2/cs^2 = (lambda + 2 mu)/mu, the parametrisation used by the
  // benchmark scenarios.
  static Material from_wave_ratio(double rho0, double mu, double cd2_over_cs2) {
    Material m;
    m.rho0 = rho0;
    m.mu = mu;
    m.lambda = mu * (cd2_over_cs2 - 2.0);
    m.validate();
    return m;
  }

  void validate() const {
    if (!(rho0 > 0.0)) throw std::invalid_argument("material: rho0 must be positive");
    if (!(mu > 0.0)) throw std::invalid_argument("material: mu must be positive");
    // lambda/mu > -2/3 keeps nu in (-1, 1/2) and cd > cs
    if (!(lambda > -2.0 / 3.0 * mu))
      throw std::invalid_argument("material: lambda/mu must exceed -2/3");
  }
};

}  // namespace elbm

#endif
