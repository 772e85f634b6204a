// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file image_io.hpp
/// 8-bit PNG for color, little-endian PFM for float maps.
///

#pragma once

#include <tsdfs/field.hpp>

#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

namespace tsdfs {

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Rows top to bottom. Components are clamped to [0, 1] and rounded to 8 bits;
/// values are written as rendered, without gamma.
void write_png(const std::filesystem::path& path, int width, int height,
               std::span<const Rgb> pixels);

struct RgbImage
{
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;  // rows top to bottom, components in [0, 1]
};

RgbImage read_png(const std::filesystem::path& path);

/// A float map with 1 or 3 channels, rows top to bottom, channels interleaved.
struct PfmImage
{
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<float> data;
};

/// Writes "Pf" or "PF" with scale -1 (little endian); rows go bottom to top
/// on disk as the format requires.
void write_pfm(const std::filesystem::path& path, const PfmImage& image);
/// Accepts either byte order.
PfmImage read_pfm(const std::filesystem::path& path);

}  // namespace tsdfs
