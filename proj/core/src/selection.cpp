/*
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "playpack/selection.hpp"

#include <algorithm>
#include <set>

#include "playpack/error.hpp"
#include "playpack/rng.hpp"

namespace playpack {

void PreferenceProfile::validate() const {
  require(ranked_labels.size() <= kAngleBins, "at most nine ranked labels");
  std::set<AngleLabel> seen;
  for (AngleLabel label : ranked_labels) {
    require(seen.insert(label).second, "ranked labels must be distinct");
  }
}

UtilityMap build_utilities(const PreferenceProfile& profile) {
  profile.validate();
  UtilityMap utilities;
  if (profile.ranked_labels.empty()) {
    utilities.by_bin.fill(1.0);
    return utilities;
  }

  std::array<bool, kAngleBins> ranked{};
  for (std::size_t rank = 0; rank < profile.ranked_labels.size(); ++rank) {
    const std::size_t bin = bin_index(profile.ranked_labels[rank]);
    utilities.by_bin[bin] = 10.0 - static_cast<double>(rank + 1);
    ranked[bin] = true;
  }
  const double ceiling = 10.0 - static_cast<double>(profile.ranked_labels.size());

  SplitMix64 rng(profile.seed);
  std::set<double> used;
  for (std::size_t bin = 0; bin < kAngleBins; ++bin) {
    if (ranked[bin]) continue;
    double weight = 0.0;
    do {
      weight = rng.uniform() * ceiling;
    } while (weight <= 0.0 || weight >= ceiling || !used.insert(weight).second);
    utilities.by_bin[bin] = weight;
  }
  return utilities;
}

double selection_objective(const std::vector<EventSegment>& segments,
                           const UtilityMap& utilities,
                           const std::vector<std::size_t>& selected) {
  double value = 0.0;
  for (std::size_t index : selected) {
    const EventSegment& seg = segments[index];
    value += utilities.weight(seg.label) * static_cast<double>(seg.duration_frames());
  }
  return value;
}

namespace {

void validate_instance(const std::vector<EventSegment>& segments, int target_frames) {
  require(target_frames >= 0, "target_frames must be non-negative");
  for (const EventSegment& seg : segments) {
    require(seg.duration_frames() >= 1, "segment durations must be at least 1");
  }
}

}  // namespace

std::vector<std::size_t> knapsack_select(const std::vector<EventSegment>& segments,
                                         const UtilityMap& utilities,
                                         int target_frames) {
  validate_instance(segments, target_frames);
  const std::size_t n = segments.size();
  const std::size_t capacity = static_cast<std::size_t>(target_frames);

  // Suffix DP: after processing item i (descending), value[c]/frames[c]
  // describe the best pack of items i..n-1 within capacity c. Taking the
  // current item on a full tie keeps the index set lexicographically
  // smallest, because the skip branch only contains larger indices.
  std::vector<double> value(capacity + 1, 0.0);
  std::vector<long long> frames(capacity + 1, 0);
  std::vector<std::vector<bool>> take(n, std::vector<bool>(capacity + 1, false));
  for (std::size_t ii = n; ii-- > 0;) {
    const auto duration = static_cast<std::size_t>(segments[ii].duration_frames());
    const double item_value = utilities.weight(segments[ii].label) *
                              static_cast<double>(segments[ii].duration_frames());
    if (duration > capacity) continue;
    for (std::size_t c = capacity; c >= duration; --c) {
      const double cand_value = item_value + value[c - duration];
      const long long cand_frames =
          static_cast<long long>(duration) + frames[c - duration];
      if (cand_value > value[c] ||
          (cand_value == value[c] && cand_frames <= frames[c])) {
        value[c] = cand_value;
        frames[c] = cand_frames;
        take[ii][c] = true;
      }
    }
  }

  std::vector<std::size_t> selected;
  std::size_t c = capacity;
  for (std::size_t i = 0; i < n; ++i) {
    if (take[i][c]) {
      selected.push_back(i);
      c -= static_cast<std::size_t>(segments[i].duration_frames());
    }
  }
  return selected;
}

std::vector<std::size_t> brute_force_select(const std::vector<EventSegment>& segments,
                                            const UtilityMap& utilities,
                                            int target_frames) {
  validate_instance(segments, target_frames);
  const std::size_t n = segments.size();
  require(n <= 20, "brute-force selection refuses more than 20 segments");

  std::vector<std::size_t> best;
  double best_value = 0.0;
  long long best_frames = 0;
  std::vector<std::size_t> candidate;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) total += segments[i].duration_frames();
    }
    if (total > target_frames) continue;
    candidate.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) candidate.push_back(i);
    }
    const double cand_value = selection_objective(segments, utilities, candidate);
    if (cand_value > best_value ||
        (cand_value == best_value &&
         (total < best_frames ||
          (total == best_frames &&
           std::lexicographical_compare(candidate.begin(), candidate.end(),
                                        best.begin(), best.end()))))) {
      best = candidate;
      best_value = cand_value;
      best_frames = total;
    }
  }
  return best;
}

SummaryPlan build_plan(const std::vector<EventSegment>& segments,
                       const std::vector<std::size_t>& selected,
                       int target_frames, const UtilityMap& utilities) {
  require(target_frames >= 0, "target_frames must be non-negative");
  std::vector<std::size_t> ordered = selected;
  std::sort(ordered.begin(), ordered.end());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    require(ordered[i] < segments.size(), "selected index out of range");
    require(i == 0 || ordered[i] != ordered[i - 1], "selected indices must be distinct");
  }

  SummaryPlan plan;
  plan.target_frames = target_frames;
  plan.clips.reserve(ordered.size());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&segments](std::size_t a, std::size_t b) {
                     return segments[a].start_frame < segments[b].start_frame;
                   });
  for (std::size_t index : ordered) {
    const EventSegment& seg = segments[index];
    const double utility =
        utilities.weight(seg.label) * static_cast<double>(seg.duration_frames());
    plan.clips.push_back(SummaryPlan::Clip{seg, utility});
    plan.total_frames += seg.duration_frames();
    plan.total_utility += utility;
  }
  require(plan.total_frames <= target_frames, "selection exceeds the target length");
  return plan;
}

}  // namespace playpack
