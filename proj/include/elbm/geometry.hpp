#ifndef ELBM_GEOMETRY_HPP
#define ELBM_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elbm/errors.hpp"
#include "elbm/lattice.hpp"
#include "elbm/types.hpp"

namespace elbm {

enum class BcKind { dirichlet, neumann };

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

// Rectangle faces in the fixed order used for deterministic tie-breaking.
enum Face : int { kLeft = 0, kRight = 1, kBottom = 2, kTop = 3 };

struct FaceTreatment {
  bool periodic = false;
  int bc = -1;  // index into the scenario's boundary-condition table
};

struct Circle {
  Vec2 center{};
  double radius = 0.0;
  int bc = -1;
};

// Zero-thickness slit; both faces carry the same boundary condition,
// applied with the face-local normal.
struct Slit {
  Vec2 a{};
  Vec2 b{};
  int bc = -1;
};

struct DomainSpec {
  Rect rect;
  std::array<FaceTreatment, 4> faces{};
  std::vector<Circle> circles;
  std::vector<Slit> slits;
};

// Regular lattice of sites placed half a spacing inside the rectangle, so a
// wall along a rectangle face sits exactly halfway along the crossing links.
struct Grid {
  int nx = 0, ny = 0;
  double dx = 0.0;
  Vec2 site0{};  // position of site (0, 0)
  bool periodic_x = false, periodic_y = false;

  int n_sites() const { return nx * ny; }
  int index(int i, int j) const { return j * nx + i; }
  Vec2 pos(int i, int j) const { return {site0.x + i * dx, site0.y + j * dx}; }
  Vec2 pos(int s) const { return pos(s % nx, s / nx); }

  // Neighbour site index one link away, or -1 when it leaves the lattice.
  int neighbor(int s, int exi, int eyi) const;

  static Grid from_rect(const Rect& r, double dx, bool periodic_x, bool periodic_y);
};

// One lattice link cut by the boundary: the owning material site, the
// direction pointing across the boundary, the cut fraction s_i/l_i, the
// outward unit normal at the intersection and the boundary condition.
struct BoundaryLink {
  int site = -1;
  int dir = 0;          // direction leading out of the material
  double q = 0.5;       // cut fraction in (0, 1]
  Vec2 normal{};        // unit, points out of the material
  int bc = -1;
  int neighbor = -1;    // site at x - c_i dt, used by the interpolation rules
  bool neighbor_ok = false;
};

struct GeometryLayout {
  std::vector<std::uint8_t> solid;     // 1 for sites inside an obstacle
  std::vector<std::uint8_t> cut_mask;  // bit (i-1) set when link i is cut
  std::vector<std::uint8_t> grad_mask; // axis-neighbor availability, bits +x,+y,-x,-y
  std::vector<BoundaryLink> links;

  bool is_cut(int site, int dir) const { return cut_mask[site] & (1u << (dir - 1)); }
};

// Walks every link of every material site and records the first boundary
// intersection along it. Throws geometry_error for under-resolved features.
GeometryLayout classify_links(const DomainSpec& domain, const Grid& grid,
                              std::span<const BcKind> bc_kinds);

// Orthonormal boundary frame with rows (normal, tangent); the tangent is the
// normal rotated by +90 degrees. Throws for non-unit normals.
struct Frame {
  Vec2 n{};
  Vec2 t{};
};
Frame normal_frame(Vec2 n);

// Exact intersection primitives, exposed for tests.
// Parametric distance in (0, 1] at which p + t d first enters the circle.
std::optional<double> ray_circle_entry(Vec2 p, Vec2 d, Vec2 center, double radius);
// Parametric distance in (0, 1] at which p + t d crosses the open segment ab;
// crossings within `graze_tol` of an endpoint of ab do not count.
std::optional<double> segment_slit_crossing(Vec2 p, Vec2 d, Vec2 a, Vec2 b,
                                            double graze_tol = 1e-9);

}  // namespace elbm

#endif
