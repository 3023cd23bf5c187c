#ifndef ELBM_DYNAMICS_HPP
#define ELBM_DYNAMICS_HPP

#include <array>

#include "elbm/lattice.hpp"
#include "elbm/types.hpp"

namespace elbm {

struct Moments {
  double rho = 0.0;
  Vec2 j{};
  SymTensor2 p{};
};

// Equilibrium distribution of the elastodynamic LBM,
//   f_i = w_i ( rho + c_i.j / cs^2 + (P - rho cs^2 I) : (c_i c_i - cs^2 I) / (2 cs^4) ).
// Entries may be negative; they are bookkeeping variables, not populations.
inline std::array<double, D2Q9::kQ> equilibrium(const D2Q9& lat, double rho, Vec2 j,
                                                const SymTensor2& p) {
  const double axx = p.xx - rho * lat.cs2;
  const double axy = p.xy;
  const double ayy = p.yy - rho * lat.cs2;
  const double inv_cs2 = 1.0 / lat.cs2;
  const double inv_2cs4 = 0.5 / lat.cs4;
  std::array<double, D2Q9::kQ> f{};
  for (int i = 0; i < D2Q9::kQ; ++i) {
    const double cj = lat.cx[i] * j.x + lat.cy[i] * j.y;
    const double aq = axx * lat.qxx[i] + 2.0 * axy * lat.qxy[i] + ayy * lat.qyy[i];
    f[i] = D2Q9::w[i] * (rho + cj * inv_cs2 + aq * inv_2cs4);
  }
  return f;
}

// Directional source projection psi_i = w_i c_i.S / cs^2. Its zeroth weight
// moment vanishes, so the source feeds momentum only.
inline std::array<double, D2Q9::kQ> source_projection(const D2Q9& lat, Vec2 s) {
  std::array<double, D2Q9::kQ> psi{};
  const double inv_cs2 = 1.0 / lat.cs2;
  for (int i = 0; i < D2Q9::kQ; ++i)
    psi[i] = D2Q9::w[i] * (lat.cx[i] * s.x + lat.cy[i] * s.y) * inv_cs2;
  return psi;
}

// BGK relaxation with the trapezoidal source weighting of the second-order
// discretisation: f_col = f - dt/tau (f - feq) + dt (1 - dt/(2 tau)) psi.
inline std::array<double, D2Q9::kQ> collide(const std::array<double, D2Q9::kQ>& f,
                                            const std::array<double, D2Q9::kQ>& feq,
                                            const std::array<double, D2Q9::kQ>& psi,
                                            double tau_bar, double dt) {
  const double omega = dt / tau_bar;
  const double sw = dt * (1.0 - 0.5 * omega);
  std::array<double, D2Q9::kQ> out{};
  for (int i = 0; i < D2Q9::kQ; ++i) out[i] = f[i] - omega * (f[i] - feq[i]) + sw * psi[i];
  return out;
}

// Moments of a distribution vector. The momentum moment carries the
// half-step source shift j = sum f c + dt/2 S.
inline Moments compute_moments(const D2Q9& lat, const std::array<double, D2Q9::kQ>& f, Vec2 s,
                               double dt) {
  Moments m;
  for (int i = 0; i < D2Q9::kQ; ++i) {
    m.rho += f[i];
    m.j.x += f[i] * lat.cx[i];
    m.j.y += f[i] * lat.cy[i];
    m.p.xx += f[i] * lat.cx[i] * lat.cx[i];
    m.p.xy += f[i] * lat.cx[i] * lat.cy[i];
    m.p.yy += f[i] * lat.cy[i] * lat.cy[i];
  }
  m.j.x += 0.5 * dt * s.x;
  m.j.y += 0.5 * dt * s.y;
  return m;
}

}  // namespace elbm

#endif
