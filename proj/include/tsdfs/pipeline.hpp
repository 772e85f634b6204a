// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file pipeline.hpp
/// The CLI subcommands as library calls. Each cmd_* writes its files into
/// config.output_dir from the calling thread after all rendering is done and
/// returns the in-memory results. The render_* / fuse_* helpers do no I/O.
///

#pragma once

#include <tsdfs/config.hpp>
#include <tsdfs/metrics.hpp>
#include <tsdfs/render.hpp>
#include <tsdfs/sampling.hpp>
#include <tsdfs/tsdf.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tsdfs {

/// A required input file (usually the fused volume) does not exist.
class MissingArtifactError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::filesystem::path volume_path(const SceneConfig& config);

/// Reference-sampler depth maps of every train camera; pixels whose weight
/// sum is zero get NaN and are skipped by fusion.
std::vector<DepthFrame> render_train_depths(const SceneConfig& config, const Field& field,
                                            int threads = 0);

struct IntegrateResult
{
    TsdfVolume volume;
    FusionStats stats;
};

/// Renders train depths and fuses them into an empty volume.
IntegrateResult fuse_scene(const SceneConfig& config, const Field& field, int threads = 0);

/// Writes volume.tsdf, fusion_stats.csv and fusion_timing.csv.
IntegrateResult cmd_integrate(const SceneConfig& config, int threads = 0);

/// Loads volume.tsdf; throws MissingArtifactError when it is absent and
/// DomainError when its grid disagrees with the config.
TsdfVolume load_volume(const SceneConfig& config);

/// Pixel-center rays of the given cameras, every `stride`-th pixel per axis.
std::vector<Ray> camera_rays(const std::vector<PinholeCamera>& cameras, int stride = 1);

/// Fills in dt_target for tsdf_full when it is 0, calibrated on train rays
/// (test rays when there are no train cameras).
SamplerConfig resolve_sampler(const SceneConfig& config, SamplerConfig sampler,
                              const TsdfVolume* volume);

SamplingContext make_context(const SceneConfig& config, const Field& field,
                             const TsdfVolume* volume);

struct RenderOutput
{
    Frame frame;
    Frame reference;
    MetricReport report;
    SamplerConfig sampler;  // resolved
};

/// evaluate_frame with depth and normals of both frames cleared where the
/// weight sum is below 0.5.
MetricReport compare_to_reference(const Frame& frame, const Frame& reference);

Frame render_reference(const SceneConfig& config, const Field& field, const PinholeCamera& camera,
                       int threads = 0);

/// Renders one test view with `sampler` and compares it with the reference.
/// `volume` may be null for the non-TSDF kinds.
RenderOutput render_view(const SceneConfig& config, const Field& field, const TsdfVolume* volume,
                         const SamplerConfig& sampler, int view, int threads = 0);

/// Writes <stem>_color.png, _depth.pfm, _normal.pfm, _weight.pfm,
/// _stats.csv and _timing.csv for config.sampler at test view `view`.
RenderOutput cmd_render(const SceneConfig& config, int view, int threads = 0);

struct BenchRow
{
    SamplerKind kind = SamplerKind::uniform;
    Budget budget;
    double dt_target = 0.0;
    MetricReport report;  // averaged over the test views
    std::uint64_t total_queries = 0;
};

struct BenchResult
{
    std::vector<BenchRow> rows;
    BoundStats bounds;  // train rays against the analytic first hit
};

/// Train rays paired with their analytic first-hit distance.
std::vector<RayWithReference> reference_rays(const SceneConfig& config, const Field& field);

/// Sweeps bench.samplers x bench.budgets over every test view. Writes
/// bench.csv, bench_timing.csv and bound_stats.csv.
BenchResult cmd_bench(const SceneConfig& config, int threads = 0);

struct RaySampleRow
{
    double t = 0.0;
    std::optional<double> voxel_value;  // absent outside the grid
    double sdf = 0.0;
    double sigma = 0.0;
    double weight = 0.0;
    SampleTag tag = SampleTag::coarse;
};

struct RayProfileRow
{
    double t = 0.0;
    std::optional<double> voxel_value;
    std::optional<double> voxel_weight;
    double sdf = 0.0;
};

struct RayDump
{
    Ray ray;
    std::optional<SampleBounds> bounds;  // absent when the ray misses the grid
    std::vector<RaySampleRow> samples;
    std::vector<RayProfileRow> profile;  // quarter-voxel steps across the clipped range
    RayRenderResult result;
};

/// Per-sample diagnostics for one pixel of a test view, using the sampler's
/// bounded sample set (no recovery). Throws DomainError for pixels outside
/// the image.
RayDump dump_ray(const SceneConfig& config, const Field& field, const TsdfVolume& volume,
                 const SamplerConfig& sampler, int view, int px, int py);

/// Writes ray_samples.csv, ray_profile.csv, ray_bounds.csv and ray_plot.png.
RayDump cmd_ray_dump(const SceneConfig& config, int view, int px, int py);

}  // namespace tsdfs
