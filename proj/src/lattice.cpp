#include "elbm/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace elbm {

double D2Q9::link_length(int i) const {
  return dx * std::sqrt(double(ex[i] * ex[i] + ey[i] * ey[i]));
}

D2Q9 build_d2q9(double dx, double shear_speed) {
  if (!(dx > 0.0)) throw std::invalid_argument("build_d2q9: dx must be positive");
  if (!(shear_speed > 0.0)) throw std::invalid_argument("build_d2q9: shear speed must be positive");

  D2Q9 lat;
  lat.dx = dx;
  lat.dt = dx / (std::sqrt(3.0) * shear_speed);
  lat.c = dx / lat.dt;
  lat.cs = shear_speed;
  lat.cs2 = lat.cs * lat.cs;
  lat.cs4 = lat.cs2 * lat.cs2;
  for (int i = 0; i < D2Q9::kQ; ++i) {
    lat.cx[i] = D2Q9::ex[i] * lat.c;
    lat.cy[i] = D2Q9::ey[i] * lat.c;
    lat.qxx[i] = lat.cx[i] * lat.cx[i] - lat.cs2;
    lat.qxy[i] = lat.cx[i] * lat.cy[i];
    lat.qyy[i] = lat.cy[i] * lat.cy[i] - lat.cs2;
  }
  return lat;
}

}  // namespace elbm
