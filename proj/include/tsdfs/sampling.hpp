// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file sampling.hpp
/// Sample placement along a ray: uniform, hierarchical coarse/fine,
/// TSDF-bounded with a fixed count ("naive"), TSDF-bounded with a count
/// proportional to the bound length ("full"), and the full-range recovery
/// pass for rays whose bounded render comes out transparent.
///
/// Everything here is a pure function of (field, frozen volume, config, ray)
/// and safe to call from many threads.
///

#pragma once

#include <tsdfs/field.hpp>
#include <tsdfs/render.hpp>
#include <tsdfs/tsdf.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace tsdfs {

enum class SamplerKind { uniform, hierarchical, tsdf_naive, tsdf_full };

const char* to_string(SamplerKind kind);
/// Throws DomainError for unknown names.
SamplerKind parse_sampler_kind(const std::string& name);

/// How the fine pass is placed inside TSDF bounds.
enum class FineMode { inverse_cdf, uniform };

struct SamplerConfig
{
    SamplerKind kind = SamplerKind::tsdf_full;
    int n_coarse = 6;
    int n_fine = 8;            // 0 disables the fine pass
    double dt_target = 0.0;    // m, coarse spacing for tsdf_full; see calibrate_dt_target
    int n_min = 2;
    int n_max = 64;
    double tau = 0.95;         // recovery threshold on the weight sum; 0 disables recovery
    int recovery_samples = 64; // coarse and fine count of the recovery pass
    double t_near = 0.0;       // m, global range before clipping to the cube
    double t_far = 100.0;
    FineMode fine_mode = FineMode::inverse_cdf;
    bool jitter = false;       // stratified jitter instead of midpoints
    std::uint64_t seed = 0;

    void validate() const;
};

/// Midpoint-stratified: t_i = t_near + (i + 0.5) (t_far - t_near) / n.
SampleSet uniform_samples(double t_near, double t_far, int n);

/// Edges of the bins owned by each sample: t_near, midpoints, t_far.
std::vector<double> bin_edges(const SampleSet& samples);

inline constexpr double kPdfEpsilon = 1e-5;

/// Inverts the piecewise-constant CDF of (weights + epsilon) over `edges` at
/// n stratified quantiles (j + 0.5) / n, or (j + U) / n when `rng` is given.
std::vector<double> inverse_cdf(std::span<const double> edges, std::span<const double> weights,
                                int n, std::mt19937_64* rng = nullptr);

/// Fine samples from the coarse weights, merged and sorted with the coarse set.
/// Fine samples that coincide exactly with a coarse one are dropped.
SampleSet importance_resample(const SampleSet& coarse, std::span<const double> weights,
                              int n_fine, std::mt19937_64* rng = nullptr);

/// Global range of a ray: [t_near, t_far] intersected with the rendering cube.
std::optional<RayInterval> global_range(const Ray& ray, const SamplerConfig& cfg,
                                        const GridBounds& cube);

/// Shared inputs of the samplers. `volume` is only needed by the TSDF kinds.
struct SamplingContext
{
    const Field* field = nullptr;
    const TsdfVolume* volume = nullptr;
    TsdfConfig tsdf;
    GridBounds cube;
    RenderOptions render;
};

/// Coarse uniform pass over `range`, evaluated and composited, then n_fine
/// inverse-CDF samples. The returned set caches the coarse evaluations.
SampleSet hierarchical_sample(const Field& field, const Ray& ray, double t_near, double t_far,
                              int n_coarse, int n_fine, const DensityParams& density,
                              std::mt19937_64* rng = nullptr);

/// A TSDF-bounded sample set, or nothing when the grid finds no surface.
struct BoundedSamples
{
    SampleBounds bounds;
    std::optional<SampleSet> samples;
};

/// Fixed n_coarse + n_fine inside the detected bounds.
BoundedSamples tsdf_sample_naive(const SamplingContext& ctx, const Ray& ray,
                                 const SamplerConfig& cfg, std::mt19937_64* rng = nullptr);

/// clamp(ceil(range_len / dt_target), n_min, n_max).
int adaptive_count(double range_len, const SamplerConfig& cfg);

/// Coarse count from adaptive_count, fine count scaled by the same ratio.
BoundedSamples tsdf_sample_full(const SamplingContext& ctx, const Ray& ray,
                                const SamplerConfig& cfg, std::mt19937_64* rng = nullptr);

/// Chooses dt_target for tsdf_full: starts from mean bound length / n_coarse
/// over `rays` and widens it until the mean per-ray count of found rays no
/// longer exceeds n_coarse + n_fine.
double calibrate_dt_target(const TsdfVolume& volume, const TsdfConfig& tsdf,
                           std::span<const Ray> rays, const SamplerConfig& cfg);

/// TSDF-bounded render; when its weight sum is below tau (or no bound was found
/// on a ray whose range is observed) the ray is re-rendered over the global
/// range with recovery_samples coarse + fine and the result with the larger
/// weight sum is kept. Queries of both passes are counted.
RayRenderResult render_with_recovery(const SamplingContext& ctx, const Ray& ray,
                                     const SamplerConfig& cfg);

/// Produces the sample set of any kind for one ray (no recovery). Nothing when
/// the ray misses the global range or the grid finds no surface.
std::optional<SampleSet> sample_ray(const SamplingContext& ctx, const Ray& ray,
                                    const SamplerConfig& cfg);

/// RayIntegrator over a sampler configuration: recovery applies to the TSDF
/// kinds when tau > 0.
class SamplingIntegrator final : public RayIntegrator
{
public:
    SamplingIntegrator(SamplingContext ctx, SamplerConfig cfg);
    RayRenderResult integrate(const Ray& ray) const override;

    const SamplerConfig& config() const { return cfg_; }

private:
    SamplingContext ctx_;
    SamplerConfig cfg_;
};

}  // namespace tsdfs
