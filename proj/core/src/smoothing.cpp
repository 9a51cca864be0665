/*
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "playpack/smoothing.hpp"

#include <array>

#include "playpack/error.hpp"

namespace playpack {

AngleSeries mode_filter(const AngleSeries& series, int window) {
  require(window >= 3 && window % 2 == 1, "mode filter window must be odd and >= 3");
  AngleSeries out{series.start_frame, {}};
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(series.labels.size());
  out.labels.resize(series.labels.size());
  const std::ptrdiff_t half = window / 2;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t lo = i - half < 0 ? 0 : i - half;
    const std::ptrdiff_t hi = i + half + 1 > n ? n : i + half + 1;
    std::array<int, kAngleBins> counts{};
    for (std::ptrdiff_t j = lo; j < hi; ++j) {
      ++counts[bin_index(series.labels[static_cast<std::size_t>(j)])];
    }
    int best = 0;
    for (int c : counts) best = c > best ? c : best;
    const std::size_t center = bin_index(series.labels[static_cast<std::size_t>(i)]);
    if (counts[center] == best) {
      out.labels[static_cast<std::size_t>(i)] = series.labels[static_cast<std::size_t>(i)];
      continue;
    }
    for (std::size_t bin = 0; bin < kAngleBins; ++bin) {
      if (counts[bin] == best) {
        out.labels[static_cast<std::size_t>(i)] = label_at_bin(bin);
        break;
      }
    }
  }
  return out;
}

AngleSeries smooth_cascade(const AngleSeries& series, const std::vector<int>& windows) {
  require(!series.empty(), "smoothing requires a non-empty series");
  AngleSeries out = series;
  for (int window : windows) out = mode_filter(out, window);
  return out;
}

}  // namespace playpack
