#include "elbm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace elbm {

namespace {

constexpr double kTieTol = 1e-12;   // corner tie detection on the cut parameter
constexpr double kSnapTol = 1e-12;  // snap to the conforming half-way fraction
constexpr double kMinCut = 1e-9;    // smaller cuts mean the boundary runs through a site

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

struct Cut {
  double t = std::numeric_limits<double>::infinity();
  Vec2 normal{};
  int bc = -1;
  BcKind kind = BcKind::neumann;
  int slit = -1;  // index of the slit that produced this cut, if any
  bool valid() const { return std::isfinite(t); }
};

}  // namespace

int Grid::neighbor(int s, int exi, int eyi) const {
  int i = s % nx + exi;
  int j = s / nx + eyi;
  if (periodic_x) i = (i + nx) % nx;
  if (periodic_y) j = (j + ny) % ny;
  if (i < 0 || i >= nx || j < 0 || j >= ny) return -1;
  return index(i, j);
}

Grid Grid::from_rect(const Rect& r, double dx, bool periodic_x, bool periodic_y) {
  if (!(dx > 0.0)) throw geometry_error("grid: dx must be positive");
  if (!(r.width() > 0.0) || !(r.height() > 0.0))
    throw geometry_error("grid: rectangle must have positive extent");
  Grid g;
  g.dx = dx;
  g.nx = static_cast<int>(std::lround(r.width() / dx));
  g.ny = static_cast<int>(std::lround(r.height() / dx));
  if (g.nx < 2 || g.ny < 2) throw geometry_error("grid: fewer than two sites per direction");
  if (std::abs(g.nx * dx - r.width()) > 1e-6 * dx ||
      std::abs(g.ny * dx - r.height()) > 1e-6 * dx)
    throw geometry_error("grid: rectangle extent is not an integer multiple of dx");
  g.site0 = {r.x0 + 0.5 * dx, r.y0 + 0.5 * dx};
  g.periodic_x = periodic_x;
  g.periodic_y = periodic_y;
  return g;
}

Frame normal_frame(Vec2 n) {
  if (std::abs(norm(n) - 1.0) > 1e-12)
    throw std::invalid_argument("normal_frame: normal must be unit length");
  return {n, perp(n)};
}

std::optional<double> ray_circle_entry(Vec2 p, Vec2 d, Vec2 center, double radius) {
  const Vec2 m = p - center;
  const double a = dot(d, d);
  const double b = 2.0 * dot(m, d);
  const double c = dot(m, m) - radius * radius;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  // smaller root first: the segment enters the disc there
  const double t0 = (-b - sq) / (2.0 * a);
  const double t1 = (-b + sq) / (2.0 * a);
  for (double t : {t0, t1})
    if (t > 0.0 && t <= 1.0) return t;
  return std::nullopt;
}

std::optional<double> segment_slit_crossing(Vec2 p, Vec2 d, Vec2 a, Vec2 b, double graze_tol) {
  const Vec2 e = b - a;
  const double denom = d.x * e.y - d.y * e.x;
  if (denom == 0.0) return std::nullopt;  // parallel; sites never lie on the slit
  const Vec2 ap = a - p;
  const double t = (ap.x * e.y - ap.y * e.x) / denom;
  const double u = (ap.x * d.y - ap.y * d.x) / denom;
  // open segment: crossings at (or numerically indistinguishable from) the
  // slit tips are not cuts
  if (u <= graze_tol || u >= 1.0 - graze_tol) return std::nullopt;
  if (t <= 0.0 || t > 1.0) return std::nullopt;
  return t;
}

GeometryLayout classify_links(const DomainSpec& domain, const Grid& grid,
                              std::span<const BcKind> bc_kinds) {
  const Rect& r = domain.rect;

  for (const Circle& c : domain.circles) {
    if (c.radius < 2.0 * grid.dx)
      throw geometry_error("circle obstacle under-resolved: radius < 2 dx");
    if (c.center.x - c.radius <= r.x0 || c.center.x + c.radius >= r.x1 ||
        c.center.y - c.radius <= r.y0 || c.center.y + c.radius >= r.y1)
      throw geometry_error("circle obstacle must lie strictly inside the rectangle");
  }
  for (const Slit& s : domain.slits) {
    if (norm(s.b - s.a) == 0.0) throw geometry_error("slit endpoints must be distinct");
    for (Vec2 e : {s.a, s.b})
      if (e.x <= r.x0 || e.x >= r.x1 || e.y <= r.y0 || e.y >= r.y1)
        throw geometry_error("slit must lie strictly inside the rectangle");
  }

  GeometryLayout lay;
  const int n = grid.n_sites();
  lay.solid.assign(n, 0);
  lay.cut_mask.assign(n, 0);
  lay.grad_mask.assign(n, 0);

  for (int s = 0; s < n; ++s) {
    const Vec2 p = grid.pos(s);
    for (const Circle& c : domain.circles)
      if (norm(p - c.center) <= c.radius) lay.solid[s] = 1;
    for (const Slit& sl : domain.slits)
      if (!lay.solid[s] && dist_point_segment(p, sl.a, sl.b) < 1e-9 * grid.dx)
        throw geometry_error("slit passes through a lattice site");
  }

  // face planes in the fixed order left, right, bottom, top
  const std::array<Vec2, 4> face_normal = {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -1}, Vec2{0, 1}};

  auto face_cut = [&](Vec2 p, Vec2 d, int face) -> std::optional<double> {
    double t;
    if (face == kLeft || face == kRight) {
      if (d.x == 0.0) return std::nullopt;
      t = ((face == kLeft ? r.x0 : r.x1) - p.x) / d.x;
    } else {
      if (d.y == 0.0) return std::nullopt;
      t = ((face == kBottom ? r.y0 : r.y1) - p.y) / d.y;
    }
    if (t <= 0.0 || t > 1.0 + kTieTol) return std::nullopt;
    return t;
  };

  auto kind_of = [&](int bc) {
    return (bc >= 0 && bc < static_cast<int>(bc_kinds.size())) ? bc_kinds[bc]
                                                               : BcKind::neumann;
  };

  std::vector<std::size_t> slit_cut_count(domain.slits.size(), 0);

  for (int s = 0; s < n; ++s) {
    if (lay.solid[s]) continue;
    const Vec2 p = grid.pos(s);
    for (int i = 1; i < D2Q9::kQ; ++i) {
      const Vec2 d{D2Q9::ex[i] * grid.dx, D2Q9::ey[i] * grid.dx};
      Cut best;

      for (int face = 0; face < 4; ++face) {
        if (domain.faces[face].periodic) continue;
        if (auto t = face_cut(p, d, face)) {
          Cut cand{*t, face_normal[face], domain.faces[face].bc,
                   kind_of(domain.faces[face].bc)};
          // exact corner hits resolve in favour of the Neumann rule
          if (std::abs(cand.t - best.t) <= kTieTol) {
            if (best.kind == BcKind::dirichlet && cand.kind == BcKind::neumann) best = cand;
          } else if (cand.t < best.t) {
            best = cand;
          }
        }
      }
      for (const Circle& c : domain.circles) {
        if (auto t = ray_circle_entry(p, d, c.center, c.radius)) {
          if (*t < best.t - kTieTol) {
            const Vec2 hit = p + (*t) * d;
            Vec2 nrm = (c.center - hit) * (1.0 / norm(c.center - hit));
            best = {*t, nrm, c.bc, kind_of(c.bc)};
          }
        }
      }
      for (std::size_t k = 0; k < domain.slits.size(); ++k) {
        const Slit& sl = domain.slits[k];
        if (auto t = segment_slit_crossing(p, d, sl.a, sl.b)) {
          if (*t < best.t - kTieTol) {
            Vec2 nrm = perp(sl.b - sl.a);
            nrm = nrm * (1.0 / norm(nrm));
            if (dot(d, nrm) < 0.0) nrm = -nrm;  // outward from the side being left
            best = {*t, nrm, sl.bc, kind_of(sl.bc), static_cast<int>(k)};
          }
        }
      }

      if (!best.valid()) continue;
      if (best.slit >= 0) ++slit_cut_count[best.slit];
      if (best.t < kMinCut)
        throw geometry_error("boundary passes through lattice site " + std::to_string(s));

      double q = best.t;
      if (std::abs(q - 0.5) < kSnapTol) q = 0.5;  // conforming placement, recovered exactly
      if (q > 1.0) q = 1.0;

      BoundaryLink link;
      link.site = s;
      link.dir = i;
      link.q = q;
      link.normal = best.normal;
      link.bc = best.bc;
      lay.links.push_back(link);
      lay.cut_mask[s] |= static_cast<std::uint8_t>(1u << (i - 1));
    }
  }

  for (std::size_t k = 0; k < domain.slits.size(); ++k)
    if (slit_cut_count[k] == 0)
      throw geometry_error("slit cuts no lattice links; refine dx or lengthen the slit");

  // second pass: the upstream site x - c_i dt feeding the interpolation rules
  auto usable = [&](int from, int to, int dir_from_to) {
    return to >= 0 && !lay.solid[to] && !lay.is_cut(from, dir_from_to);
  };
  for (BoundaryLink& link : lay.links) {
    const int ib = D2Q9::opposite[link.dir];
    const int nb = grid.neighbor(link.site, D2Q9::ex[ib], D2Q9::ey[ib]);
    link.neighbor = nb;
    link.neighbor_ok = usable(link.site, nb, ib);
  }

  // axis-neighbor availability for the density gradient, bits +x,+y,-x,-y
  for (int s = 0; s < n; ++s) {
    if (lay.solid[s]) continue;
    std::uint8_t m = 0;
    for (int i = 1; i <= 4; ++i) {
      const int nb = grid.neighbor(s, D2Q9::ex[i], D2Q9::ey[i]);
      if (usable(s, nb, i)) m |= static_cast<std::uint8_t>(1u << (i - 1));
    }
    lay.grad_mask[s] = m;
  }

  return lay;
}

}  // namespace elbm
