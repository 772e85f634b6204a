// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file metrics.hpp
/// Image and geometry error metrics between a rendered frame and a reference.
/// All inputs are linear-light values as rendered; no gamma is applied.
///

#pragma once

#include <tsdfs/field.hpp>
#include <tsdfs/render.hpp>

#include <cstddef>
#include <span>
#include <string>

namespace tsdfs {

/// -10 log10(MSE / peak^2), MSE over all channels. +inf for identical images.
double psnr(std::span<const Rgb> a, std::span<const Rgb> b, double peak = 1.0);

/// Luma weights applied before SSIM.
inline constexpr double kLumaR = 0.2126;
inline constexpr double kLumaG = 0.7152;
inline constexpr double kLumaB = 0.0722;
inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

double luma(const Rgb& c);

/// Mean SSIM over every full 11x11 window (no padding), peak 1.
double ssim(std::span<const Rgb> a, std::span<const Rgb> b, int width, int height);

/// A mean over the pixels that passed the validity mask.
struct MaskedMean
{
    double value = 0.0;
    std::size_t count = 0;
};

/// Mean |a - b| in centimeters over pixels where both depths are finite and
/// mask (if given) is nonzero. Throws when no pixel qualifies.
MaskedMean depth_mae_cm(std::span<const double> a, std::span<const double> b,
                        std::span<const unsigned char> mask = {});

/// Mean angle in degrees between unit normals, over pixels where both normals
/// are nonzero and mask (if given) is nonzero. Throws when no pixel qualifies.
MaskedMean normal_angle_error_deg(std::span<const Vec3> a, std::span<const Vec3> b,
                                  std::span<const unsigned char> mask = {});

struct MetricReport
{
    double psnr_db = 0.0;
    double ssim = 0.0;
    double depth_mae_cm = 0.0;     // NaN when no pixel has depth in both frames
    double normal_err_deg = 0.0;   // NaN when no pixel has a normal in both frames
    std::size_t depth_pixels = 0;
    std::size_t normal_pixels = 0;
    double avg_samples = 0.0;
    double queries_per_ray = 0.0;
    double wall_time_s = 0.0;
    double recovery_fraction = 0.0;
};

/// Compares `frame` against `reference` (same dimensions).
MetricReport evaluate_frame(const Frame& frame, const Frame& reference);

/// Column order of metric_csv_row. Without `timing` the wall-clock column is
/// left out so that repeated runs produce identical files.
std::string metric_csv_header(bool timing = true);
std::string metric_csv_row(const MetricReport& report, bool timing = true);

/// Shortest round-trip text for a double; "inf", "-inf" and "nan" for the rest.
std::string format_number(double v);

}  // namespace tsdfs
