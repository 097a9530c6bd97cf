#pragma once

// Dense rank-1..4 arrays of coordinate components at a single point, with
// index variance recorded per slot. Index order is always (t, r, theta, phi).

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace mag {

enum class Variance : std::uint8_t { Up, Down };

class ComponentArray {
 public:
  ComponentArray() = default;

  explicit ComponentArray(std::initializer_list<Variance> variance) {
    rank_ = static_cast<int>(variance.size());
    if (rank_ < 1 || rank_ > 4)
      throw std::invalid_argument("ComponentArray rank must be 1..4");
    int i = 0;
    for (Variance v : variance) variance_[i++] = v;
    size_ = 1;
    for (int k = 0; k < rank_; ++k) size_ *= 4;
    data_.fill(0.0);
  }

  int rank() const { return rank_; }
  int size() const { return size_; }
  Variance variance(int slot) const { return variance_[slot]; }

  double& operator()(int i) { return data_[flat({i})]; }
  double operator()(int i) const { return data_[flat({i})]; }
  double& operator()(int i, int j) { return data_[flat({i, j})]; }
  double operator()(int i, int j) const { return data_[flat({i, j})]; }
  double& operator()(int i, int j, int k) { return data_[flat({i, j, k})]; }
  double operator()(int i, int j, int k) const { return data_[flat({i, j, k})]; }
  double& operator()(int i, int j, int k, int l) { return data_[flat({i, j, k, l})]; }
  double operator()(int i, int j, int k, int l) const { return data_[flat({i, j, k, l})]; }

  double& at_flat(int idx) { return data_[idx]; }
  double at_flat(int idx) const { return data_[idx]; }

  // Decode a flat offset into per-slot indices.
  void unflatten(int idx, int out[4]) const {
    for (int s = rank_ - 1; s >= 0; --s) {
      out[s] = idx & 3;
      idx >>= 2;
    }
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < size_; ++i) m = std::max(m, std::fabs(data_[i]));
    return m;
  }

  friend ComponentArray operator-(const ComponentArray& a, const ComponentArray& b) {
    ComponentArray out = a;
    for (int i = 0; i < out.size_; ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend ComponentArray operator+(const ComponentArray& a, const ComponentArray& b) {
    ComponentArray out = a;
    for (int i = 0; i < out.size_; ++i) out.data_[i] += b.data_[i];
    return out;
  }
  ComponentArray& operator*=(double s) {
    for (int i = 0; i < size_; ++i) data_[i] *= s;
    return *this;
  }

 private:
  int flat(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank_)
      throw std::invalid_argument("index count does not match rank");
    int f = 0;
    for (int i : idx) f = f * 4 + i;
    return f;
  }

  int rank_ = 0;
  int size_ = 0;
  std::array<Variance, 4> variance_{};
  std::array<double, 256> data_{};
};

}  // namespace mag
