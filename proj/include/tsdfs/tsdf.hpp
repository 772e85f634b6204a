// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file tsdf.hpp
/// Dense truncated-SDF grid built from depth maps, voxel traversal, and the
/// per-ray near/far sample-bound detection that drives bounded sampling.
///
/// Concurrency: fusion follows a single-writer contract. integrate_ray and
/// integrate_frames mutate the grid and must not run concurrently with each
/// other or with readers. Once fusion is done the volume is treated as frozen
/// and every const member (detect_bounds, neighbors_all_negative, ...) is safe
/// to call from any number of threads.
///

#pragma once

#include <tsdfs/geometry.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace tsdfs {

struct VoxelIndex
{
    int x = 0;
    int y = 0;
    int z = 0;

    constexpr int operator[](int a) const { return a == 0 ? x : (a == 1 ? y : z); }
    constexpr int& operator[](int a) { return a == 0 ? x : (a == 1 ? y : z); }
    friend constexpr bool operator==(const VoxelIndex&, const VoxelIndex&) = default;
};

/// Fusion and bound-detection parameters, all distances in meters.
struct TsdfConfig
{
    double truncation = 0.05;  // D_T, clamp radius of fused values
    double surface = 0.01;     // D_s, phase-1 "near a surface" threshold
    int confirm_steps = 5;     // M consecutive inside confirmations
    int neighborhood = 2;      // k, inspects a (2k+1)^3 block

    void validate() const;

    /// D_T = 5 voxels, D_s = 1 voxel, 5x5x5 block, M = 5. For accurate fields.
    static TsdfConfig accurate_preset(double voxel_size);
    /// D_T = 39 voxels, D_s = 27 voxels, 7x7x7 block, M = 15. For noisy fields.
    static TsdfConfig noisy_preset(double voxel_size);
};

/// w = 1 in front of the surface, falling linearly to 0 at s = -D_T behind it.
double weight_fn(double s, double truncation);

class TsdfVolume
{
public:
    static constexpr float kUnseenValue = -1.0f;

    /// Voxels must be cubes: extent / res has to agree on all three axes.
    TsdfVolume(const GridBounds& bounds, std::array<int, 3> res, double truncation);

    const GridBounds& bounds() const { return bounds_; }
    const std::array<int, 3>& res() const { return res_; }
    double voxel_size() const { return voxel_size_; }
    double truncation() const { return truncation_; }
    std::size_t voxel_count() const { return values_.size(); }

    bool in_range(const VoxelIndex& idx) const;
    std::size_t linear_index(const VoxelIndex& idx) const;

    float value(const VoxelIndex& idx) const { return values_[linear_index(idx)]; }
    float weight(const VoxelIndex& idx) const { return weights_[linear_index(idx)]; }
    bool seen(const VoxelIndex& idx) const { return weight(idx) > 0.0f; }
    std::size_t seen_count() const;

    /// x-fastest dense arrays.
    std::span<const float> values() const { return values_; }
    std::span<const float> weights() const { return weights_; }

    /// Weighted running average; a voxel's first update replaces the unseen
    /// marker because its weight is still zero.
    void update(const VoxelIndex& idx, double s, double w);
    /// Overwrites one voxel. Test fixtures only.
    void set(const VoxelIndex& idx, float value, float weight);

    /// floor((p - min) / voxel_size) with half-open cells; throws when p is
    /// outside [min, max).
    VoxelIndex voxel_of(const Vec3& p) const;
    /// Same cell rule, clamped into the grid. For points known to be on the
    /// cube's surface up to rounding.
    VoxelIndex voxel_of_clamped(const Vec3& p) const;
    Vec3 voxel_center(const VoxelIndex& idx) const;

    void save(const std::filesystem::path& path) const;
    static TsdfVolume load(const std::filesystem::path& path);

private:
    GridBounds bounds_;
    std::array<int, 3> res_;
    double voxel_size_ = 0.0;
    double truncation_ = 0.0;
    std::vector<float> values_;
    std::vector<float> weights_;
};

/// Size in bytes of the fixed `.tsdf` header.
inline constexpr std::size_t kTsdfHeaderBytes = 4 + 4 + 3 * 4 + 6 * 8 + 8;

struct VoxelStep
{
    VoxelIndex index;
    double t = 0.0;
    bool inside = true;  // false once the step leaves the grid
};

/// One Amanatides-Woo step from `index`, which the ray occupies at parameter t.
/// Moves across the nearest face; exact edge/corner ties step the lowest axis
/// first, so the following call may return the same t. Axes with a zero
/// direction component never cross.
VoxelStep next_voxel(const TsdfVolume& volume, const VoxelIndex& index, double t, const Ray& ray);

struct VoxelVisit
{
    VoxelIndex index;
    double t_in = 0.0;
    double t_out = 0.0;
};

/// Visits every voxel the ray crosses from max(t_start, cube entry) to the cube
/// exit, in order. The callback returns false to stop early.
template <class Visit>
void
walk_voxels(const TsdfVolume& volume, const Ray& ray, double t_start, Visit&& visit)
{
    const auto clip = clip_to_bounds(ray, volume.bounds());
    if (!clip || t_start >= clip->t_exit) {
        return;
    }
    double t = std::fmax(t_start, clip->t_enter);
    VoxelIndex index = volume.voxel_of_clamped(ray.origin + ray.dir * t);
    const std::array<int, 3>& res = volume.res();
    // A straight line crosses at most res_x + res_y + res_z cells.
    for (int guard = res[0] + res[1] + res[2] + 3; guard > 0; --guard) {
        const VoxelStep step = next_voxel(volume, index, t, ray);
        if (!visit(VoxelVisit{index, t, step.t})) {
            return;
        }
        if (!step.inside) {
            return;
        }
        index = step.index;
        t = step.t;
    }
}

/// Fuses one depth observation; returns the number of voxel updates. Stops at
/// the first voxel with clamped SDF <= -D_T or at grid exit.
std::size_t integrate_ray(TsdfVolume& volume, const Ray& ray, double depth);

/// A depth map for one camera; non-finite or non-positive entries are skipped.
struct DepthFrame
{
    PinholeCamera camera;
    std::vector<double> depth;  // row-major, width * height
};

struct FusionStats
{
    std::size_t frames = 0;
    std::size_t rays = 0;  // pixels with a usable depth
    std::size_t voxel_updates = 0;
    std::size_t seen_voxels = 0;
    double wall_time_s = 0.0;
};

FusionStats integrate_frames(TsdfVolume& volume, std::span<const DepthFrame> frames);

/// True iff every voxel of the (2k+1)^3 block around index (clipped to the grid)
/// is negative. Unseen voxels fail the test unless `unseen_counts_inside`.
bool neighbors_all_negative(const TsdfVolume& volume, const VoxelIndex& index, int k,
                            bool unseen_counts_inside = false);

enum class BoundStatus { found, no_surface };

const char* to_string(BoundStatus status);

struct SampleBounds
{
    double t_near = 0.0;
    double t_far = 0.0;
    BoundStatus status = BoundStatus::no_surface;
    bool confirmed = false;     // t_far came from M inside confirmations
    bool touched_seen = false;  // the walk visited at least one seen voxel
};

/// Near/far sample bounds for one ray from a fused volume.
///
/// Phase 1 marches until a voxel's value is <= D_s (unseen voxels qualify) and
/// opens t_near there. Phase 2 counts consecutive voxels whose neighborhood is
/// all negative; M in a row closes t_far at the exit of the last one. Unseen
/// neighbors only count as inside once the ray has crossed a seen negative
/// voxel, so never-observed empty space cannot confirm a far bound. If phase 2
/// runs out of grid, t_far falls back to min(grid exit, global_far).
/// Throws DomainError when the ray misses the cube.
SampleBounds detect_bounds(const TsdfVolume& volume, const Ray& ray, const TsdfConfig& config,
                           double global_far);

struct RayWithReference
{
    Ray ray;
    std::optional<double> reference_depth;  // absent: no surface on this ray
};

struct BoundStats
{
    std::size_t rays = 0;
    std::size_t found = 0;
    std::size_t failures = 0;
    double mean_original_range = 0.0;  // clipped global range, found rays
    double mean_reduced_range = 0.0;   // t_far - t_near, found rays
    double failure_rate() const { return rays ? static_cast<double>(failures) / rays : 0.0; }
    double range_ratio() const
    {
        return mean_original_range > 0.0 ? mean_reduced_range / mean_original_range : 0.0;
    }
};

/// A ray fails when its reference depth lies outside [t_near, t_far], or when it
/// has a reference depth but no bound was found.
BoundStats bound_stats(const TsdfVolume& volume, std::span<const RayWithReference> rays,
                       const TsdfConfig& config, double global_near, double global_far);

}  // namespace tsdfs
