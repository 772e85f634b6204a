// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file field.hpp
/// Analytic signed-distance scenes standing in for a trained surface field,
/// and the SDF-to-density transform used by the renderer.
///

#pragma once

#include <tsdfs/geometry.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace tsdfs {

/// Linear RGB, components in [0, 1].
using Rgb = Vec3;

struct FieldSample
{
    double sdf = 0.0;  // meters, negative inside
    Rgb color;
};

/// Laplace-CDF density: sigma = alpha_scale * Psi_beta(-sdf).
struct DensityParams
{
    double alpha_scale = 100.0;  // 1 / m
    double beta = 0.01;          // m

    void validate() const;
};

double sdf_to_density(double sdf, const DensityParams& params);

/// A scalar field queried by the renderer. Implementations must be immutable
/// after construction; every method may be called from many threads.
class Field
{
public:
    virtual ~Field() = default;

    virtual double sdf(const Vec3& p) const = 0;
    /// SDF plus view-dependent color for a sample at p seen along unit v.
    virtual FieldSample eval(const Vec3& p, const Vec3& v) const = 0;
    /// Central-difference step for normals.
    virtual double gradient_step() const = 0;
    /// Upper bound on |grad sdf|; 1 for exact distance fields.
    virtual double lipschitz_bound() const { return 1.0; }
};

/// Thrown by field_normal when the gradient vanishes.
class DegenerateGradientError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// Normalized central-difference gradient of field.sdf. Costs six sdf calls.
Vec3 field_normal(const Field& field, const Vec3& p);

struct Sphere
{
    Vec3 center;
    double radius = 1.0;
};

struct Box
{
    Vec3 center;
    Vec3 half_extents{1.0, 1.0, 1.0};
};

/// Half-space dot(normal, p) - offset >= 0 is outside.
struct Plane
{
    Vec3 normal{0.0, 1.0, 0.0};
    double offset = 0.0;
};

using Shape = std::variant<Sphere, Box, Plane>;

struct Primitive
{
    Shape shape;
    Rgb color{1.0, 1.0, 1.0};
};

double shape_sdf(const Shape& shape, const Vec3& p);
/// Analytic outward gradient of shape_sdf; ties on box faces go to the lowest
/// axis. Returns the zero vector where the gradient is undefined.
Vec3 shape_normal(const Shape& shape, const Vec3& p);

/// Trilinear value noise on a cubic lattice. Values are bounded by amplitude
/// and continuous everywhere.
struct NoiseParams
{
    double amplitude = 0.0;  // m
    double cell = 0.1;       // m
    std::uint64_t seed = 0;
};

double value_noise(const NoiseParams& noise, const Vec3& p);

/// Min-union of primitives with an optional noise perturbation.
class Scene final : public Field
{
public:
    Scene() = default;
    Scene(std::vector<Primitive> primitives, std::optional<NoiseParams> noise,
          double gradient_step);

    double sdf(const Vec3& p) const override;
    FieldSample eval(const Vec3& p, const Vec3& v) const override;
    double gradient_step() const override { return fd_step_; }
    double lipschitz_bound() const override;

    const std::vector<Primitive>& primitives() const { return primitives_; }
    const std::optional<NoiseParams>& noise() const { return noise_; }

    /// Index of the primitive with the smallest SDF at p (lowest index on ties),
    /// or -1 for an empty scene.
    int nearest_primitive(const Vec3& p) const;

private:
    std::vector<Primitive> primitives_;
    std::optional<NoiseParams> noise_;
    double fd_step_ = 1e-4;
};

/// Distance along the ray to the first zero crossing of field.sdf inside
/// [t_min, t_max], found by Lipschitz-safe sphere tracing with a bisection
/// finish. Used as the analytic first-hit oracle.
std::optional<double> first_hit(const Field& field, const Ray& ray, double t_min, double t_max);

}  // namespace tsdfs
