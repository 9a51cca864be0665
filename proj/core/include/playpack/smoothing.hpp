/*
 * Mode-filter smoothing of categorical angle series.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <vector>

#include "playpack/motion_features.hpp"

namespace playpack {

inline const std::vector<int> kSmoothingWindows = {3, 5, 7, 9};

// Sliding mode filter with an odd window (>= 3), truncated at the sequence
// boundaries. Ties keep the center label when it is among the tied ones and
// otherwise take the smallest tied label. Length is preserved.
AngleSeries mode_filter(const AngleSeries& series, int window);

// Sequential mode-filter passes, one per window, over a non-empty series.
// Isolated single-frame outliers disappear; no new labels are introduced.
AngleSeries smooth_cascade(const AngleSeries& series,
                           const std::vector<int>& windows = kSmoothingWindows);

}  // namespace playpack
