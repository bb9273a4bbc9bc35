#pragma once

#include <Eigen/Dense>

namespace tad {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat12 = Eigen::Matrix<double, 12, 12>;

// 6x6 state transition matrix, rows/cols ordered (x, y, z, x', y', z').
using Stm6 = Mat6;

// 12x12 matrix viewed as a 2x2 arrangement of 6x6 blocks.
struct Block12 {
  Mat12 value = Mat12::Zero();

  Block12() = default;
  explicit Block12(const Mat12& m) : value(m) {}

  static Block12 assemble(const Mat6& b11, const Mat6& b12, const Mat6& b21,
                          const Mat6& b22) {
    Block12 out;
    out.value.topLeftCorner<6, 6>() = b11;
    out.value.topRightCorner<6, 6>() = b12;
    out.value.bottomLeftCorner<6, 6>() = b21;
    out.value.bottomRightCorner<6, 6>() = b22;
    return out;
  }

  Mat6 b11() const { return value.topLeftCorner<6, 6>(); }
  Mat6 b12() const { return value.topRightCorner<6, 6>(); }
  Mat6 b21() const { return value.bottomLeftCorner<6, 6>(); }
  Mat6 b22() const { return value.bottomRightCorner<6, 6>(); }
};

inline Mat12 block_diag(const Mat6& a, const Mat6& b) {
  Mat12 out = Mat12::Zero();
  out.topLeftCorner<6, 6>() = a;
  out.bottomRightCorner<6, 6>() = b;
  return out;
}

}  // namespace tad
