#pragma once

#include <array>
#include <cmath>

namespace mag {

using Mat4 = std::array<std::array<double, 4>, 4>;

inline double det4(const Mat4& m) {
  // expansion via LU with partial pivoting
  Mat4 a = m;
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row)
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < 4; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return det;
}

// Gauss-Jordan inverse with partial pivoting; returns false when singular.
inline bool invert4(const Mat4& m, Mat4& out) {
  Mat4 a = m;
  out = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row)
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0.0) return false;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(out[pivot], out[col]);
    }
    const double inv = 1.0 / a[col][col];
    for (int k = 0; k < 4; ++k) {
      a[col][k] *= inv;
      out[col][k] *= inv;
    }
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      const double f = a[row][col];
      if (f == 0.0) continue;
      for (int k = 0; k < 4; ++k) {
        a[row][k] -= f * a[col][k];
        out[row][k] -= f * out[col][k];
      }
    }
  }
  return true;
}

}  // namespace mag
