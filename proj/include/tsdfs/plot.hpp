// Copyright 2026 The tsdfs Authors
// SPDX-License-Identifier: Apache-2.0

///
/// @file plot.hpp
/// Minimal raster line plot for ray diagnostics. No text rendering; the CSV
/// written next to the plot carries the numbers.
///

#pragma once

#include <tsdfs/field.hpp>

#include <vector>

namespace tsdfs {

struct PlotSeries
{
    std::vector<double> x;
    std::vector<double> y;
    Rgb color;
};

struct PlotMarker
{
    double x = 0.0;
    double y = 0.0;
    Rgb color;
};

struct LinePlot
{
    int width = 800;
    int height = 400;
    Rgb background{1.0, 1.0, 1.0};
    std::vector<PlotSeries> series;
    std::vector<PlotMarker> markers;            // 5x5 squares
    std::vector<std::pair<double, Rgb>> vlines;  // full-height vertical lines at x
    /// Axis ranges; derived from the data when min >= max.
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
};

/// Row-major pixels, top row first. Non-finite points break a series.
std::vector<Rgb> rasterize(const LinePlot& plot);

}  // namespace tsdfs
