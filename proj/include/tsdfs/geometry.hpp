// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file geometry.hpp
/// Rays, pinhole cameras and the axis-aligned rendering cube shared by the
/// field, renderer and TSDF grid.
///

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace tsdfs {

/// Thrown whenever an operation is called outside its documented domain.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr Vec3 cmul(const Vec3& a, const Vec3& b) { return {a.x * b.x, a.y * b.y, a.z * b.z}; }
constexpr Vec3 vmin(const Vec3& a, const Vec3& b)
{
    return {a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y, a.z < b.z ? a.z : b.z};
}
constexpr Vec3 vmax(const Vec3& a, const Vec3& b)
{
    return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y, a.z > b.z ? a.z : b.z};
}
inline Vec3 vabs(const Vec3& a) { return {std::abs(a.x), std::abs(a.y), std::abs(a.z)}; }
inline double length(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_component(const Vec3& a) { return std::fmax(a.x, std::fmax(a.y, a.z)); }
inline bool is_finite(const Vec3& a)
{
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Throws DomainError for the zero vector.
Vec3 normalize(const Vec3& a);

/// Row-major 3x3 matrix; used for camera rotations only.
struct Mat3
{
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
    Vec3 operator*(const Vec3& v) const;
    Vec3 column(int i) const { return {m[i], m[3 + i], m[6 + i]}; }
};

/// World-from-camera rigid transform.
struct Pose
{
    Mat3 rotation;
    Vec3 translation;

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
    Vec3 rotate(const Vec3& v) const { return rotation * v; }
};

struct Ray
{
    Vec3 origin;
    Vec3 dir;  // unit length
};

/// Ray parameterized by arc length: origin + t * dir, t >= 0.
Vec3 point_at(const Ray& ray, double t);

/// Builds a ray and checks |dir| = 1 (normalizes when within tolerance of it,
/// throws otherwise).
Ray make_ray(const Vec3& origin, const Vec3& dir);

struct PixelCoord
{
    double u = 0.0;
    double v = 0.0;
};

/// Camera looks down +z in its own frame, x to the right, y down.
struct PinholeCamera
{
    Pose pose;
    double fx = 1.0;
    double fy = 1.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 1;
    int height = 1;

    Vec3 center() const { return pose.translation; }
    void validate() const;
};

/// Camera at `eye` looking at `target`; `up` fixes the roll. Intrinsics from a
/// horizontal field of view with the principal point at the image center.
PinholeCamera look_at_camera(const Vec3& eye, const Vec3& target, const Vec3& up,
                             double hfov_deg, int width, int height);

/// Ray through continuous pixel coordinates (u, v); pixel (i, j) has its
/// center at (i + 0.5, j + 0.5).
Ray generate_ray(const PinholeCamera& camera, PixelCoord px);

struct GridBounds
{
    Vec3 min;
    Vec3 max;

    Vec3 extent() const { return max - min; }
    double diagonal() const { return length(max - min); }
    bool contains(const Vec3& p) const
    {
        return p.x >= min.x && p.y >= min.y && p.z >= min.z &&
               p.x <= max.x && p.y <= max.y && p.z <= max.z;
    }
    void validate() const;
};

struct RayInterval
{
    double t_enter = 0.0;
    double t_exit = 0.0;
};

/// Slab test. t_enter is clamped to 0 for origins inside the cube; returns
/// nothing when the ray misses or the cube lies entirely behind the origin.
std::optional<RayInterval> clip_to_bounds(const Ray& ray, const GridBounds& bounds);

}  // namespace tsdfs
