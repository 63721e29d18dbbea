#include "dg1d/mesh.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "dg1d/errors.hpp"

namespace dg1d {

Mesh1D::Mesh1D(std::vector<double> faces, BoundaryKind boundary)
    : faces_(std::move(faces)), boundary_(boundary) {
  if (faces_.size() < 2) {
    throw ConfigError("mesh needs at least two faces (one element)");
  }
  for (std::size_t f = 1; f < faces_.size(); ++f) {
    if (!(faces_[f] > faces_[f - 1])) {
      throw ConfigError("mesh faces must be strictly increasing (face " +
                        std::to_string(f) + ")");
    }
  }
}

Mesh1D Mesh1D::uniform(double x_min, double x_max, int n,
                       BoundaryKind boundary) {
  if (n < 1) {
    throw ConfigError("element count must be positive, got " +
                      std::to_string(n));
  }
  if (!(x_min < x_max)) {
    throw ConfigError("mesh interval is inverted or empty");
  }
  std::vector<double> faces(static_cast<std::size_t>(n) + 1);
  const double width = (x_max - x_min) / n;
  for (int f = 0; f <= n; ++f) {
    faces[f] = x_min + f * width;
  }
  faces.front() = x_min;
  faces.back() = x_max;  // endpoints exact regardless of rounding
  return Mesh1D(std::move(faces), boundary);
}

Neighbor Mesh1D::neighbor(int k, Side side) const {
  const int n = num_elements();
  assert(k >= 0 && k < n);
  const int j = (side == Side::left) ? k - 1 : k + 1;
  if (j >= 0 && j < n) {
    return {j, false};
  }
  if (boundary_ == BoundaryKind::periodic) {
    return {(j + n) % n, false};
  }
  return {k, true};  // transmissive: ghost mirrors the interior trace
}

}  // namespace dg1d
