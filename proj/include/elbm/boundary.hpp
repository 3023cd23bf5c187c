#ifndef ELBM_BOUNDARY_HPP
#define ELBM_BOUNDARY_HPP

#include <stdexcept>

#include "elbm/continuum.hpp"
#include "elbm/geometry.hpp"
#include "elbm/lattice.hpp"
#include "elbm/material.hpp"
#include "elbm/types.hpp"

namespace elbm {

enum class Profile { constant, step, linear, ramp_hold };

// Prescribed boundary value as a function of time. Dirichlet schedules carry
// a displacement vector (constant / moving wall / ramped), Neumann schedules
// a normal traction magnitude; the traction vector is value * normal.
struct Schedule {
  BcKind kind = BcKind::neumann;
  Profile profile = Profile::constant;
  Vec2 u_value{};        // Dirichlet: target displacement or velocity (linear)
  double p_value = 0.0;  // Neumann: normal traction magnitude
  double ramp_time = 0.0;

  Vec2 displacement(double t) const {
    switch (profile) {
      case Profile::constant:
      case Profile::step: return u_value;
      case Profile::linear: return u_value * t;
      case Profile::ramp_hold:
        return u_value * (t < ramp_time ? t / ramp_time : 1.0);
    }
    return {};
  }

  // analytic time derivative of the displacement profile
  Vec2 displacement_rate(double t) const {
    switch (profile) {
      case Profile::constant:
      case Profile::step: return {};
      case Profile::linear: return u_value;
      case Profile::ramp_hold:
        return t < ramp_time ? u_value * (1.0 / ramp_time) : Vec2{};
    }
    return {};
  }

  double pressure(double t) const {
    switch (profile) {
      case Profile::constant:
      case Profile::step: return p_value;
      case Profile::linear: return p_value * t;
      case Profile::ramp_hold:
        return p_value * (t < ramp_time ? t / ramp_time : 1.0);
    }
    return 0.0;
  }
};

struct PoissonStressTarget {
  SymTensor2 p{};
  double rho_bd = 0.0;
};

// Density at the wall, interpolated along the lattice link:
//   rho_bd = (1 + q) rho(x) - q rho(x - c_i dt).
// At q = 1/2 this is the conforming extrapolation (3 rho(x) - rho(nb))/2.
inline double boundary_density(double rho_at_x, double rho_at_neighbor, double q) {
  return (1.0 + q) * rho_at_x - q * rho_at_neighbor;
}

// Momentum boundary value from a Dirichlet displacement schedule,
// j* = rho_bd * du*/dt.
inline Vec2 dirichlet_momentum(const Schedule& sched, double rho_bd, double t) {
  return sched.displacement_rate(t) * rho_bd;
}

// Builds the target stress for the anti-bounce-back rule from a traction
// vector. The normal and shear components of the boundary Cauchy stress come
// from the traction; the tangential-tangential component is not determined
// by the boundary condition and is taken from the interior stress at the
// owning site. The result is converted to the solver's stress variable.
SymTensor2 neumann_poisson_target(Vec2 traction, Vec2 n, const SymTensor2& sigma_interior,
                                  double divu_bd, const Material& m);

// Interpolated bounce-back for a Dirichlet link cut at fraction q.
// At q = 1/2 the interpolation weight vanishes and the plain bounce-back
// with momentum correction remains.
inline double apply_dirichlet_link(const D2Q9& lat, int i, double fcol_i_x, double fcol_i_nb,
                                   double fcol_ib_x, double q, Vec2 jstar) {
  const double corr =
      (2.0 / lat.cs2) * D2Q9::w[i] * (lat.cx[i] * jstar.x + lat.cy[i] * jstar.y);
  const double a = (1.0 - 2.0 * q) / (1.0 + 2.0 * q);
  const double b = 2.0 / (1.0 + 2.0 * q);
  return fcol_i_x + a * (fcol_i_nb - fcol_ib_x) - b * corr;
}

// Interpolated anti-bounce-back for a Neumann link cut at fraction q.
inline double apply_neumann_link(const D2Q9& lat, int i, double fcol_i_x, double fcol_i_nb,
                                 double fcol_ib_x, double q, const PoissonStressTarget& target) {
  const double axx = target.p.xx - target.rho_bd * lat.cs2;
  const double axy = target.p.xy;
  const double ayy = target.p.yy - target.rho_bd * lat.cs2;
  const double aq = axx * lat.qxx[i] + 2.0 * axy * lat.qxy[i] + ayy * lat.qyy[i];
  const double wall = D2Q9::w[i] * (target.rho_bd + aq / (2.0 * lat.cs4));
  const double a = (1.0 - 2.0 * q) / (1.0 + 2.0 * q);
  const double b = 2.0 / (1.0 + 2.0 * q);
  return -fcol_i_x - a * (fcol_i_nb + fcol_ib_x) + b * 2.0 * wall;
}

}  // namespace elbm

#endif
