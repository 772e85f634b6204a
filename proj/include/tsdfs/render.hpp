// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file render.hpp
/// Numeric volume rendering along a ray: per-segment opacity, accumulated
/// transmittance, weights, and the color / depth / normal estimates built
/// from them. render_image drives any per-ray strategy over a camera.
///

#pragma once

#include <tsdfs/field.hpp>
#include <tsdfs/geometry.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tsdfs {

enum class SampleTag : std::uint8_t { coarse, fine };

const char* to_string(SampleTag tag);

/// Ordered sample parameters on one ray plus the interval they cover.
///
/// `cached` is either empty or aligned with `ts`; an engaged entry holds a
/// field evaluation the sampler already paid for (e.g. the coarse pass of
/// hierarchical sampling), so the renderer does not query it twice.
struct SampleSet
{
    std::vector<double> ts;
    std::vector<SampleTag> tags;
    double t_near = 0.0;
    double t_far = 0.0;
    std::vector<std::optional<FieldSample>> cached;

    std::size_t size() const { return ts.size(); }
    bool empty() const { return ts.empty(); }
    /// Strictly ascending, inside [t_near, t_far], tags (and cache) aligned.
    bool is_valid() const;
};

struct RayRenderResult
{
    Rgb color;
    std::optional<double> depth;
    std::optional<Vec3> normal;
    double weight_sum = 0.0;
    std::size_t samples = 0;         // |ts| over every pass
    std::size_t queries = 0;         // color/sigma evaluations
    std::size_t normal_queries = 0;  // gradient evaluations, 6 sdf calls each
    bool recovered = false;          // a full-range recovery pass ran
};

struct RenderOptions
{
    DensityParams density;
    Rgb background{0.0, 0.0, 0.0};
    bool normals = true;
    /// Only samples with weight above this get a gradient evaluation.
    double normal_weight_threshold = 1e-4;
};

/// Per-sample quantities of one render_ray call, for diagnostics and tests.
struct RayTrace
{
    std::vector<double> sdf;
    std::vector<double> sigma;
    std::vector<double> alpha;
    std::vector<double> transmittance;
    std::vector<double> weight;
};

/// 1 - exp(-sigma * dt).
double segment_alpha(double sigma, double dt);

struct CompositeWeights
{
    std::vector<double> weights;
    double weight_sum = 0.0;
};

/// w_i = T_i * alpha_i with T_i = prod_{j<i} (1 - alpha_j).
CompositeWeights compose_weights(std::span<const double> alphas);

/// Segment lengths t_{i+1} - t_i, closing the last one at samples.t_far.
std::vector<double> segment_lengths(const SampleSet& samples);

/// Renders one ray from an explicit sample set. Throws DomainError on an empty
/// or malformed set.
RayRenderResult render_ray(const Field& field, const Ray& ray, const SampleSet& samples,
                           const RenderOptions& options, RayTrace* trace = nullptr);

/// Per-ray rendering strategy (sampler + field + options) used by render_image.
class RayIntegrator
{
public:
    virtual ~RayIntegrator() = default;
    virtual RayRenderResult integrate(const Ray& ray) const = 0;
};

/// Row-major per-pixel outputs of one camera.
struct Frame
{
    int width = 0;
    int height = 0;
    std::vector<Rgb> color;
    std::vector<double> depth;   // NaN where absent
    std::vector<Vec3> normal;    // zero vector where absent
    std::vector<double> weight_sum;
    std::vector<std::uint32_t> samples;
    std::vector<std::uint32_t> queries;
    std::uint64_t total_samples = 0;
    std::uint64_t total_queries = 0;
    std::uint64_t total_normal_queries = 0;
    std::size_t recovered_rays = 0;
    std::size_t error_count = 0;  // pixels that threw; rendered as magenta
    double wall_time_s = 0.0;

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    double avg_samples() const;
    double queries_per_ray() const;
};

/// Worker count for parallel loops: `requested` if positive, else
/// hardware_concurrency, capped by the TSDF_THREADS environment variable.
int worker_count(int requested = 0);

Frame render_image(const PinholeCamera& camera, const RayIntegrator& integrator,
                   int threads = 0);

}  // namespace tsdfs
