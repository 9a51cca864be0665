/*
 * Preference-weighted clip selection: utility assignment from an ordered
 * user preference list and exact 0/1 knapsack packing of event segments
 * into a fixed summary length.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "playpack/changepoint.hpp"
#include "playpack/types.hpp"

namespace playpack {

// Ordered user event preferences, most preferred first. Labels left unranked
// receive seeded lower weights.
struct PreferenceProfile {
  std::vector<AngleLabel> ranked_labels;
  std::uint64_t seed = 0;

  void validate() const;
};

// Per-label positive weights; every ranked label outweighs every unranked
// one and ranked weights strictly decrease with rank.
struct UtilityMap {
  std::array<double, kAngleBins> by_bin{};

  double weight(AngleLabel label) const { return by_bin[bin_index(label)]; }
};

// Rank r (1-based) maps to weight 10 - r; unranked labels draw distinct
// weights from (0, smallest ranked weight) using the profile seed, assigned
// in ascending label order. An empty ranking weights all labels 1.
UtilityMap build_utilities(const PreferenceProfile& profile);

// Item value of a selection, evaluated canonically: sum over ascending
// segment index of weight(label) * duration. Both solvers and all reports
// use this one evaluation so their objectives are comparable exactly.
double selection_objective(const std::vector<EventSegment>& segments,
                           const UtilityMap& utilities,
                           const std::vector<std::size_t>& selected);

// Exact dynamic program over frame capacity: maximizes the utility-weighted
// duration of the chosen segments subject to their total duration fitting in
// target_frames. Ties between optimal sets prefer fewer total frames, then
// the lexicographically smallest index set. Returns ascending indices.
std::vector<std::size_t> knapsack_select(const std::vector<EventSegment>& segments,
                                         const UtilityMap& utilities,
                                         int target_frames);

// Exhaustive oracle with the identical objective, constraint and tie-breaks.
// Refuses instances with more than 20 segments.
std::vector<std::size_t> brute_force_select(const std::vector<EventSegment>& segments,
                                            const UtilityMap& utilities,
                                            int target_frames);

// The chosen clips in their original (chronological) order plus totals.
struct SummaryPlan {
  struct Clip {
    EventSegment segment;
    double utility = 0.0;  // weight(label) * duration

    friend bool operator==(const Clip&, const Clip&) = default;
  };

  int target_frames = 0;
  std::vector<Clip> clips;
  long long total_frames = 0;
  double total_utility = 0.0;

  friend bool operator==(const SummaryPlan&, const SummaryPlan&) = default;
};

// Assembles the plan for a feasible selection; clips are emitted in
// chronological order regardless of the order of `selected`.
SummaryPlan build_plan(const std::vector<EventSegment>& segments,
                       const std::vector<std::size_t>& selected,
                       int target_frames, const UtilityMap& utilities);

}  // namespace playpack
