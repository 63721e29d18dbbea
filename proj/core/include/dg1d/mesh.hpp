#pragma once

#include <vector>

namespace dg1d {

enum class BoundaryKind { periodic, transmissive };

enum class Side { left, right };

/// Neighbor lookup result. When `ghost` is set the exterior state is the
/// mirror of the interior trace (zero-gradient extrapolation) and `index`
/// refers back to the interior element.
struct Neighbor {
  int index = -1;
  bool ghost = false;
};

/// One-dimensional tessellation of [x_min, x_max] into N elements.
/// Faces are stored explicitly, so non-uniform meshes are a data change.
/// Immutable after construction; safe to share across element loops.
class Mesh1D {
 public:
  Mesh1D(std::vector<double> faces, BoundaryKind boundary);

  static Mesh1D uniform(double x_min, double x_max, int n,
                        BoundaryKind boundary);

  int num_elements() const { return static_cast<int>(faces_.size()) - 1; }
  double x_min() const { return faces_.front(); }
  double x_max() const { return faces_.back(); }
  BoundaryKind boundary_kind() const { return boundary_; }

  double face(int f) const { return faces_[f]; }
  double element_width(int k) const { return faces_[k + 1] - faces_[k]; }
  double element_center(int k) const {
    return 0.5 * (faces_[k] + faces_[k + 1]);
  }

  /// Physical coordinate of reference point xi in [-1,1] within element k.
  double to_physical(int k, double xi) const {
    return faces_[k] + 0.5 * element_width(k) * (xi + 1.0);
  }

  Neighbor neighbor(int k, Side side) const;

  const std::vector<double>& faces() const { return faces_; }

 private:
  std::vector<double> faces_;
  BoundaryKind boundary_;
};

inline Mesh1D build_uniform_mesh(double x_min, double x_max, int n,
                                 BoundaryKind boundary) {
  return Mesh1D::uniform(x_min, x_max, n, boundary);
}

}  // namespace dg1d
