#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sgw {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// [0,a] x [0,b]
struct Rectangle {
  double a = 1.0;
  double b = 1.0;
};

/// [0,a] x [0,b] x [0,c]
struct Box {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
};

/// Disk centred at the origin.
struct Disk {
  double radius = 1.0;
};

/// Union of [0,length] x [0,width] and [0,width] x [0,length]; width < length.
struct LShape {
  double length = 2.0;
  double width = 1.0;
};

/// Simple polygon; the closing edge from the last vertex back to the first is implicit.
struct Polygon {
  std::vector<Point2> vertices;
};

/// Coordinate rectangle [x0,x1] x [y0,y1] of the upper half-plane, metric (dx^2+dy^2)/y^2.
struct HyperbolicRect {
  double x0 = 0.0;
  double x1 = 1.0;
  double y0 = 1.0;
  double y1 = 2.0;
};

using DomainShape = std::variant<Rectangle, Box, Disk, LShape, Polygon, HyperbolicRect>;

struct DomainSpec {
  DomainShape shape = Rectangle{};

  int dimension() const { return std::holds_alternative<Box>(shape) ? 3 : 2; }
  bool is_hyperbolic() const { return std::holds_alternative<HyperbolicRect>(shape); }
  std::string kind_name() const;
};

/// Throws InvalidDomain when the invariants of the shape fail.
void validate(const DomainSpec& domain);

/// Area or volume; the Riemannian area for hyperbolic rectangles.
double volume(const DomainSpec& domain);

/// Axis directions used for neighbours and boundary fractions: -x, +x, -y, +y, -z, +z.
inline constexpr int kMaxDirections = 6;

using LatticeIndex = std::array<int, 3>;

struct LatticeIndexHash {
  std::size_t operator()(const LatticeIndex& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int c : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c));
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Strict-interior lattice nodes of a domain with per-direction boundary fractions.
struct Grid {
  DomainSpec domain;
  double h = 0.0;
  int dim = 2;
  std::vector<LatticeIndex> nodes;
  std::unordered_map<LatticeIndex, int, LatticeIndexHash> index_map;
  /// Fraction of h to the boundary along each direction, in (0,1]; 1 when the neighbour is interior.
  std::vector<std::array<double, kMaxDirections>> boundary_fractions;
  /// Dense index of the neighbour along each direction, or -1 when it is not interior.
  std::vector<std::array<int, kMaxDirections>> neighbors;

  int size() const { return static_cast<int>(nodes.size()); }
  int directions() const { return 2 * dim; }
  bool hyperbolic() const { return domain.is_hyperbolic(); }
  std::array<double, 3> position(int i) const {
    return {nodes[i][0] * h, nodes[i][1] * h, nodes[i][2] * h};
  }
  /// Index of a lattice point, or -1.
  int find(const LatticeIndex& v) const {
    auto it = index_map.find(v);
    return it == index_map.end() ? -1 : it->second;
  }
};

/// Rasterizes the domain onto the lattice hZ^n anchored at the origin.
Grid rasterize(const DomainSpec& domain, double h);

}  // namespace sgw
