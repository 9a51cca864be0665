/*
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "playpack/changepoint.hpp"

#include <array>
#include <cmath>

#include "playpack/error.hpp"

namespace playpack {

void CpdConfig::validate() const {
  require(hazard_lambda > 1.0, "hazard_lambda must exceed 1");
  require(dirichlet_alpha > 0.0, "dirichlet_alpha must be positive");
  require(min_segment_frames >= 1, "min_segment_frames must be at least 1");
}

ChangepointDetector::ChangepointDetector(CpdConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  const double hazard = 1.0 / cfg_.hazard_lambda;
  log_hazard_ = std::log(hazard);
  log_one_minus_hazard_ = std::log1p(-hazard);
  prefix_.push_back({});
  log_weights_.push_back(0.0);  // empty run, probability one
}

double ChangepointDetector::log_predictive(int run_length, std::size_t bin) const {
  const int t = static_cast<int>(history_.size());
  const int count = prefix_[static_cast<std::size_t>(t)][bin] -
                    prefix_[static_cast<std::size_t>(t - run_length)][bin];
  const double k = static_cast<double>(kAngleBins);
  return std::log(count + cfg_.dirichlet_alpha) -
         std::log(run_length + k * cfg_.dirichlet_alpha);
}

void ChangepointDetector::observe(AngleLabel label) {
  const std::size_t bin = bin_index(label);
  const std::size_t runs = log_weights_.size();

  // Joint log weight of each run length after seeing the new symbol.
  scratch_.resize(runs);
  double joint_max = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < runs; ++r) {
    scratch_[r] = log_weights_[r] + log_predictive(static_cast<int>(r), bin);
    if (scratch_[r] > joint_max) joint_max = scratch_[r];
  }
  double sum_exp = 0.0;
  for (std::size_t r = 0; r < runs; ++r) sum_exp += std::exp(scratch_[r] - joint_max);
  const double log_reset = joint_max + std::log(sum_exp) + log_hazard_;

  // Shift for growth, insert the reset mass at run length zero, and re-center
  // on the maximum so long streams cannot drift out of double range.
  log_weights_.resize(runs + 1);
  double new_max = log_reset;
  for (std::size_t r = runs; r >= 1; --r) {
    const double grown = scratch_[r - 1] + log_one_minus_hazard_;
    log_weights_[r] = grown;
    if (grown > new_max) new_max = grown;
  }
  log_weights_[0] = log_reset;
  int map_run = 0;
  double map_weight = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < log_weights_.size(); ++r) {
    log_weights_[r] -= new_max;
    if (log_weights_[r] > map_weight) {
      map_weight = log_weights_[r];
      map_run = static_cast<int>(r);
    }
  }

  history_.push_back(static_cast<std::uint8_t>(bin));
  std::array<int, kAngleBins> counts = prefix_.back();
  ++counts[bin];
  prefix_.push_back(counts);

  const int t = static_cast<int>(history_.size()) - 1;
  prev_map_run_length_ = map_run_length_;
  map_run_length_ = map_run;
  if (t > 0 && 2 * map_run_length_ < prev_map_run_length_) {
    if (t - prev_accepted_ >= cfg_.min_segment_frames) {
      changepoints_.push_back(t);
      prev_accepted_ = t;
    }
  }
}

std::vector<double> ChangepointDetector::posterior() const {
  double max = -std::numeric_limits<double>::infinity();
  for (double w : log_weights_) max = w > max ? w : max;
  double sum = 0.0;
  for (double w : log_weights_) sum += std::exp(w - max);
  const double log_z = max + std::log(sum);
  std::vector<double> probs(log_weights_.size());
  for (std::size_t r = 0; r < probs.size(); ++r) {
    probs[r] = std::exp(log_weights_[r] - log_z);
  }
  return probs;
}

std::vector<int> detect_changepoints(const AngleSeries& series, const CpdConfig& cfg) {
  require(!series.empty(), "change-point detection requires a non-empty series");
  ChangepointDetector detector(cfg);
  for (AngleLabel label : series.labels) detector.observe(label);
  return detector.changepoints();
}

std::vector<EventSegment> segment_series(const AngleSeries& series,
                                         const std::vector<int>& changepoints) {
  const int n = static_cast<int>(series.labels.size());
  int prev = 0;
  for (int cp : changepoints) {
    require(cp > 0 && cp < n, "change points must lie strictly inside the series");
    require(cp > prev, "change points must be strictly increasing");
    prev = cp;
  }

  std::vector<EventSegment> segments;
  if (n == 0) return segments;
  segments.reserve(changepoints.size() + 1);
  std::size_t next_cp = 0;
  int start = 0;
  while (start < n) {
    const int end =
        next_cp < changepoints.size() ? changepoints[next_cp++] : n;
    std::array<int, kAngleBins> counts{};
    for (int i = start; i < end; ++i) {
      ++counts[bin_index(series.labels[static_cast<std::size_t>(i)])];
    }
    std::size_t mode_bin = 0;
    for (std::size_t bin = 1; bin < kAngleBins; ++bin) {
      if (counts[bin] > counts[mode_bin]) mode_bin = bin;
    }
    segments.push_back(EventSegment{series.start_frame + start,
                                    series.start_frame + end,
                                    label_at_bin(mode_bin)});
    start = end;
  }
  return segments;
}

}  // namespace playpack
