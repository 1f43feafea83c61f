#include "sgw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "sgw/error.hpp"

namespace sgw {
namespace {

// Points closer than this (in units of h) to the boundary count as boundary points.
constexpr double kBoundarySnap = 1e-12;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

std::vector<Point2> polygon_vertices(const LShape& l) {
  return {{0.0, 0.0}, {l.length, 0.0}, {l.length, l.width},
          {l.width, l.width}, {l.width, l.length}, {0.0, l.length}};
}

double signed_area(const std::vector<Point2>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(a, c, d)) return true;
  if (d2 == 0 && on_segment(b, c, d)) return true;
  if (d3 == 0 && on_segment(c, a, b)) return true;
  if (d4 == 0 && on_segment(d, a, b)) return true;
  return false;
}

void validate_polygon(const std::vector<Point2>& v) {
  if (v.size() < 3) throw Error(ErrorCode::InvalidDomain, "polygon needs at least 3 vertices");
  for (const auto& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorCode::InvalidDomain, "polygon vertex is not finite");
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    if (a.x == b.x && a.y == b.y) throw Error(ErrorCode::InvalidDomain, "polygon has a repeated vertex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        throw Error(ErrorCode::InvalidDomain, "polygon is not simple");
    }
  }
  if (std::abs(signed_area(v)) == 0.0) throw Error(ErrorCode::InvalidDomain, "polygon has zero area");
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

bool polygon_contains(const std::vector<Point2>& v, const Point2& p, double h) {
  const double snap = kBoundarySnap * h;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, v[i], v[(i + 1) % n]) <= snap) return false;
  }
  // Even-odd rule along +x; the query is nudged upward so rays never graze a vertex.
  const double py = p.y + snap;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = v[i];
    const Point2& b = v[j];
    if ((a.y > py) != (b.y > py)) {
      const double x_cross = a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x_cross > p.x) inside = !inside;
    }
  }
  return inside;
}

// Smallest t in (0, limit] with p + t*e on the polygon boundary, e an axis direction.
double polygon_hit(const std::vector<Point2>& v, const Point2& p, const Point2& e, double limit) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    const Point2 d{b.x - a.x, b.y - a.y};
    const double denom = e.x * d.y - e.y * d.x;
    if (denom == 0.0) continue;
    const Point2 w{a.x - p.x, a.y - p.y};
    const double t = (w.x * d.y - w.y * d.x) / denom;
    const double s = (w.x * e.y - w.y * e.x) / denom;
    if (s < -1e-14 || s > 1.0 + 1e-14) continue;
    if (t > 0.0 && t <= limit * (1.0 + 1e-12)) best = std::min(best, t);
  }
  return best;
}

struct ShapeOps {
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};
  std::function<bool(const std::array<double, 3>&)> inside;
  // Distance from an interior point to the boundary along direction `dir`; at most h expected.
  std::function<double(const std::array<double, 3>&, int dir)> hit;
};

double axis_box_hit(const std::array<double, 3>& p, int dir, const std::array<double, 3>& lo,
                    const std::array<double, 3>& hi) {
  const int axis = dir / 2;
  return (dir % 2 == 0) ? p[axis] - lo[axis] : hi[axis] - p[axis];
}

ShapeOps make_ops(const DomainSpec& domain, double h) {
  const double snap = kBoundarySnap * h;
  ShapeOps ops;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle> || std::is_same_v<T, Box> ||
                      std::is_same_v<T, HyperbolicRect>) {
          std::array<double, 3> lo{0.0, 0.0, 0.0};
          std::array<double, 3> hi{0.0, 0.0, 0.0};
          int dim = 2;
          if constexpr (std::is_same_v<T, Rectangle>) {
            hi = {s.a, s.b, 0.0};
          } else if constexpr (std::is_same_v<T, Box>) {
            hi = {s.a, s.b, s.c};
            dim = 3;
          } else {
            lo = {s.x0, s.y0, 0.0};
            hi = {s.x1, s.y1, 0.0};
          }
          ops.lo = lo;
          ops.hi = hi;
          ops.inside = [lo, hi, dim, snap](const std::array<double, 3>& p) {
            for (int d = 0; d < dim; ++d) {
              if (!(p[d] > lo[d] + snap && p[d] < hi[d] - snap)) return false;
            }
            return true;
          };
          ops.hit = [lo, hi](const std::array<double, 3>& p, int dir) {
            return axis_box_hit(p, dir, lo, hi);
          };
        } else if constexpr (std::is_same_v<T, Disk>) {
          const double r = s.radius;
          ops.lo = {-r, -r, 0.0};
          ops.hi = {r, r, 0.0};
          ops.inside = [r, snap](const std::array<double, 3>& p) {
            return std::hypot(p[0], p[1]) < r - snap;
          };
          ops.hit = [r](const std::array<double, 3>& p, int dir) {
            const int axis = dir / 2;
            const double sign = (dir % 2 == 0) ? -1.0 : 1.0;
            const double along = sign * p[axis];
            const double perp = p[1 - axis];
            // |p + t e|^2 = r^2 with t > 0.
            return -along + std::sqrt(std::max(0.0, r * r - perp * perp));
          };
        } else {
          std::vector<Point2> v;
          if constexpr (std::is_same_v<T, LShape>) {
            v = polygon_vertices(s);
          } else {
            v = s.vertices;
          }
          double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
          for (const auto& q : v) {
            xmin = std::min(xmin, q.x);
            xmax = std::max(xmax, q.x);
            ymin = std::min(ymin, q.y);
            ymax = std::max(ymax, q.y);
          }
          ops.lo = {xmin, ymin, 0.0};
          ops.hi = {xmax, ymax, 0.0};
          ops.inside = [v, h](const std::array<double, 3>& p) {
            return polygon_contains(v, {p[0], p[1]}, h);
          };
          ops.hit = [v, h](const std::array<double, 3>& p, int dir) {
            const int axis = dir / 2;
            const double sign = (dir % 2 == 0) ? -1.0 : 1.0;
            const Point2 e = axis == 0 ? Point2{sign, 0.0} : Point2{0.0, sign};
            return polygon_hit(v, {p[0], p[1]}, e, h);
          };
        }
      },
      domain.shape);
  return ops;
}

}  // namespace

std::string DomainSpec::kind_name() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>) return "rectangle";
        if constexpr (std::is_same_v<T, Box>) return "box";
        if constexpr (std::is_same_v<T, Disk>) return "disk";
        if constexpr (std::is_same_v<T, LShape>) return "l_shape";
        if constexpr (std::is_same_v<T, Polygon>) return "polygon";
        if constexpr (std::is_same_v<T, HyperbolicRect>) return "hyperbolic_rect";
      },
      shape);
}

void validate(const DomainSpec& domain) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>) {
          if (!positive_finite(s.a) || !positive_finite(s.b))
            throw Error(ErrorCode::InvalidDomain, "rectangle sides must be positive");
        } else if constexpr (std::is_same_v<T, Box>) {
          if (!positive_finite(s.a) || !positive_finite(s.b) || !positive_finite(s.c))
            throw Error(ErrorCode::InvalidDomain, "box sides must be positive");
        } else if constexpr (std::is_same_v<T, Disk>) {
          if (!positive_finite(s.radius))
            throw Error(ErrorCode::InvalidDomain, "disk radius must be positive");
        } else if constexpr (std::is_same_v<T, LShape>) {
          if (!positive_finite(s.length) || !positive_finite(s.width) || !(s.width < s.length))
            throw Error(ErrorCode::InvalidDomain, "l_shape needs 0 < width < length");
        } else if constexpr (std::is_same_v<T, Polygon>) {
          validate_polygon(s.vertices);
        } else if constexpr (std::is_same_v<T, HyperbolicRect>) {
          if (!std::isfinite(s.x0) || !std::isfinite(s.x1) || !std::isfinite(s.y0) ||
              !std::isfinite(s.y1) || !(s.x1 > s.x0) || !(s.y1 > s.y0))
            throw Error(ErrorCode::InvalidDomain, "hyperbolic_rect needs x0 < x1 and y0 < y1");
          if (!(s.y0 > 0.0))
            throw Error(ErrorCode::InvalidDomain, "hyperbolic_rect needs y0 > 0");
        }
      },
      domain.shape);
}

double volume(const DomainSpec& domain) {
  validate(domain);
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>) return s.a * s.b;
        if constexpr (std::is_same_v<T, Box>) return s.a * s.b * s.c;
        if constexpr (std::is_same_v<T, Disk>) return std::numbers::pi * s.radius * s.radius;
        if constexpr (std::is_same_v<T, LShape>) return 2.0 * s.length * s.width - s.width * s.width;
        if constexpr (std::is_same_v<T, Polygon>) return std::abs(signed_area(s.vertices));
        if constexpr (std::is_same_v<T, HyperbolicRect>)
          return (s.x1 - s.x0) * (1.0 / s.y0 - 1.0 / s.y1);
      },
      domain.shape);
}

Grid rasterize(const DomainSpec& domain, double h) {
  if (!positive_finite(h)) throw Error(ErrorCode::InvalidArgument, "grid spacing must be positive");
  validate(domain);
  if (const auto* hr = std::get_if<HyperbolicRect>(&domain.shape); hr && !(h < hr->y0))
    throw Error(ErrorCode::InvalidDomain, "hyperbolic_rect requires h < y0");

  const ShapeOps ops = make_ops(domain, h);
  Grid grid;
  grid.domain = domain;
  grid.h = h;
  grid.dim = domain.dimension();

  std::array<int, 3> ilo{0, 0, 0};
  std::array<int, 3> ihi{0, 0, 0};
  for (int d = 0; d < grid.dim; ++d) {
    ilo[d] = static_cast<int>(std::floor(ops.lo[d] / h)) - 1;
    ihi[d] = static_cast<int>(std::ceil(ops.hi[d] / h)) + 1;
  }
  for (int k = ilo[2]; k <= ihi[2]; ++k) {
    for (int j = ilo[1]; j <= ihi[1]; ++j) {
      for (int i = ilo[0]; i <= ihi[0]; ++i) {
        const std::array<double, 3> p{i * h, j * h, k * h};
        if (ops.inside(p)) {
          grid.index_map.emplace(LatticeIndex{i, j, k}, static_cast<int>(grid.nodes.size()));
          grid.nodes.push_back({i, j, k});
        }
      }
    }
  }
  if (grid.nodes.empty())
    throw Error(ErrorCode::EmptyGrid, "no lattice point lies strictly inside " + domain.kind_name());

  const int dirs = grid.directions();
  grid.boundary_fractions.assign(grid.nodes.size(), {1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  grid.neighbors.assign(grid.nodes.size(), {-1, -1, -1, -1, -1, -1});
  for (int n = 0; n < grid.size(); ++n) {
    const auto p = grid.position(n);
    for (int dir = 0; dir < dirs; ++dir) {
      LatticeIndex q = grid.nodes[n];
      q[dir / 2] += (dir % 2 == 0) ? -1 : 1;
      const int idx = grid.find(q);
      grid.neighbors[n][dir] = idx;
      if (idx >= 0) continue;
      double t = ops.hit(p, dir);
      if (!std::isfinite(t) || t > h) t = h;
      grid.boundary_fractions[n][dir] = std::clamp(t / h, kBoundarySnap, 1.0);
    }
  }
  return grid;
}

}  // namespace sgw
