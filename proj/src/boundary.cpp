#include "elbm/boundary.hpp"

namespace elbm {

SymTensor2 neumann_poisson_target(Vec2 traction, Vec2 n, const SymTensor2& sigma_interior,
                                  double divu_bd, const Material& m) {
  const Frame frame = normal_frame(n);  // validates |n| = 1
  const double snn = dot(traction, frame.n);
  const double snt = dot(traction, frame.t);
  const double stt = quad_form(frame.t, sigma_interior, frame.t);

  // sigma* = snn n(x)n + snt (n(x)t + t(x)n) + stt t(x)t, which satisfies
  // sigma* . n = traction exactly
  SymTensor2 sigma;
  sigma.xx = snn * n.x * n.x + 2.0 * snt * n.x * frame.t.x + stt * frame.t.x * frame.t.x;
  sigma.xy = snn * n.x * n.y + snt * (n.x * frame.t.y + n.y * frame.t.x) +
             stt * frame.t.x * frame.t.y;
  sigma.yy = snn * n.y * n.y + 2.0 * snt * n.y * frame.t.y + stt * frame.t.y * frame.t.y;

  return poisson_from_cauchy(sigma, divu_bd, m);
}

}  // namespace elbm
