#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <initializer_list>

namespace dg1d {

// Largest number of conserved components across the supported laws
// (1D compressible Euler carries three).
inline constexpr int kMaxComponents = 4;

/// Fixed-capacity vector of conserved variables W. Plain value type,
/// no heap traffic; the active length m is carried alongside.
class State {
 public:
  State() = default;
  explicit State(int m, double fill = 0.0) : m_(m) {
    assert(m >= 0 && m <= kMaxComponents);
    std::fill_n(v_.begin(), m_, fill);
  }
  State(std::initializer_list<double> values)
      : m_(static_cast<int>(values.size())) {
    assert(m_ <= kMaxComponents);
    std::copy(values.begin(), values.end(), v_.begin());
  }

  int size() const { return m_; }

  double operator[](int c) const {
    assert(c >= 0 && c < m_);
    return v_[c];
  }
  double& operator[](int c) {
    assert(c >= 0 && c < m_);
    return v_[c];
  }

  const double* begin() const { return v_.data(); }
  const double* end() const { return v_.data() + m_; }
  double* begin() { return v_.data(); }
  double* end() { return v_.data() + m_; }

  bool all_finite() const {
    for (int c = 0; c < m_; ++c) {
      if (!std::isfinite(v_[c])) return false;
    }
    return true;
  }

  State& operator+=(const State& o) {
    assert(o.m_ == m_);
    for (int c = 0; c < m_; ++c) v_[c] += o.v_[c];
    return *this;
  }
  State& operator-=(const State& o) {
    assert(o.m_ == m_);
    for (int c = 0; c < m_; ++c) v_[c] -= o.v_[c];
    return *this;
  }
  State& operator*=(double s) {
    for (int c = 0; c < m_; ++c) v_[c] *= s;
    return *this;
  }

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(double s, State a) { return a *= s; }
  friend State operator*(State a, double s) { return a *= s; }

 private:
  std::array<double, kMaxComponents> v_{};
  int m_ = 0;
};

/// theta * a + (1 - theta) * b, the segment between two states.
inline State blend(const State& a, double theta, const State& b) {
  assert(a.size() == b.size());
  State out(a.size());
  for (int c = 0; c < a.size(); ++c) {
    out[c] = theta * a[c] + (1.0 - theta) * b[c];
  }
  return out;
}

inline double max_abs(const State& w) {
  double m = 0.0;
  for (int c = 0; c < w.size(); ++c) m = std::max(m, std::abs(w[c]));
  return m;
}

}  // namespace dg1d
