#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>

namespace posegen {

using Vec2f = Eigen::Vector2f;
using Vec3f = Eigen::Vector3f;
using Vec4f = Eigen::Vector4f;
using Vec2d = Eigen::Vector2d;
using Vec3d = Eigen::Vector3d;
using Mat2d = Eigen::Matrix2d;
using Mat3f = Eigen::Matrix3f;
using Mat3d = Eigen::Matrix3d;
using Mat4d = Eigen::Matrix4d;

// Quaternions are Hamilton convention, stored w-first (w, x, y, z).
struct Quat {
  float w = 1.0f, x = 0.0f, y = 0.0f, z = 0.0f;

  float norm() const { return std::sqrt(double(w) * w + double(x) * x + double(y) * y + double(z) * z); }

  Quat normalized() const {
    const float n = norm();
    return {w / n, x / n, y / n, z / n};
  }
};

inline Mat3d quat_to_mat(const Quat& q) {
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Mat3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
       2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
       2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y);
  return r;
}

inline Quat quat_from_axis_angle(const Vec3d& axis, double angle_rad) {
  const Vec3d a = axis.normalized();
  const double h = 0.5 * angle_rad;
  const double s = std::sin(h);
  return {float(std::cos(h)), float(a.x() * s), float(a.y() * s), float(a.z() * s)};
}

// Rigid transform as rotation + translation; composes left-to-right as matrices would.
struct RigidTransform {
  Mat3d rotation = Mat3d::Identity();
  Vec3d translation = Vec3d::Zero();

  Vec3d apply(const Vec3d& p) const { return rotation * p + translation; }

  RigidTransform operator*(const RigidTransform& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  RigidTransform inverse() const {
    Mat3d rt = rotation.transpose();
    return {rt, -(rt * translation)};
  }

  Mat4d matrix() const {
    Mat4d m = Mat4d::Identity();
    m.topLeftCorner<3, 3>() = rotation;
    m.topRightCorner<3, 1>() = translation;
    return m;
  }

  static RigidTransform translate(const Vec3d& t) { return {Mat3d::Identity(), t}; }
  static RigidTransform rotate(const Mat3d& r) { return {r, Vec3d::Zero()}; }
  static RigidTransform identity() { return {}; }
};

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }

}  // namespace posegen
