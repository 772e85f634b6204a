// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file config.hpp
/// JSON scene configuration. The schema is documented in README.md; every
/// length carries its unit in the key (`radius_m`, `hfov_deg`, ...).
///

#pragma once

#include <tsdfs/field.hpp>
#include <tsdfs/geometry.hpp>
#include <tsdfs/sampling.hpp>
#include <tsdfs/tsdf.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tsdfs {

inline constexpr int kConfigSchemaVersion = 1;

/// Invalid configuration; `path()` names the offending field, e.g.
/// "cameras.test[2].hfov_deg".
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string path, const std::string& message);
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct GridSpec
{
    GridBounds bounds{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
    int res = 64;
    std::string preset = "accurate";  // "accurate" or "noisy"; sizes scale with the voxel
    std::optional<double> truncation_m;
    std::optional<double> surface_m;
    std::optional<int> confirm_steps;
    std::optional<int> neighborhood;

    double voxel_size() const { return bounds.extent().x / res; }
    /// Preset at the current voxel size with explicit overrides applied.
    TsdfConfig tsdf_config() const;
};

/// A sampler budget "c+f".
struct Budget
{
    int n_coarse = 0;
    int n_fine = 0;
    int total() const { return n_coarse + n_fine; }
};

/// Throws DomainError unless `text` looks like "6+8".
Budget parse_budget(const std::string& text);
std::string to_string(const Budget& budget);

struct BenchSpec
{
    std::vector<SamplerKind> samplers{SamplerKind::hierarchical, SamplerKind::tsdf_naive,
                                      SamplerKind::tsdf_full};
    std::vector<Budget> budgets{{64, 32}, {6, 8}};
};

struct SceneConfig
{
    int schema_version = kConfigSchemaVersion;
    std::vector<Primitive> primitives;
    std::optional<NoiseParams> noise;
    std::optional<double> gradient_step_m;  // default 1e-4 * grid diagonal
    DensityParams density;
    Rgb background{0.0, 0.0, 0.0};
    std::vector<PinholeCamera> train_cameras;
    std::vector<PinholeCamera> test_cameras;
    GridSpec grid;
    SamplerConfig sampler;
    int reference_samples = 256;  // uniform reference used for fusion and metrics
    BenchSpec bench;
    std::filesystem::path output_dir = "out";

    /// Throws ConfigError with the path of the first violated constraint.
    void validate() const;

    double gradient_step() const { return gradient_step_m.value_or(1e-4 * grid.bounds.diagonal()); }
    Scene make_scene() const;
    RenderOptions render_options() const;
    /// Uniform sampler with reference_samples over the global range.
    SamplerConfig reference_sampler() const;
};

/// Parses and validates. `output.dir` is resolved relative to the config file.
SceneConfig load_config(const std::filesystem::path& path);
SceneConfig parse_config(const std::string& json_text,
                         const std::filesystem::path& base_dir = {});

/// Cameras on a horizontal circle looking at `target`.
std::vector<PinholeCamera> orbit_cameras(const Vec3& center, double radius, double height,
                                         const Vec3& target, int count, double hfov_deg,
                                         int width, int height_px, double phase_deg = 0.0);

}  // namespace tsdfs
