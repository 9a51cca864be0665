/*
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "playpack/track_interp.hpp"

#include <algorithm>
#include <map>

#include "playpack/error.hpp"

namespace playpack {

namespace {

// Most frequent value; ties resolved toward the smaller one.
double mode_smallest(std::vector<double> values) {
  require(!values.empty(), "mode of an empty sample");
  std::sort(values.begin(), values.end());
  double best = values.front();
  std::size_t best_count = 0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (j - i > best_count) {
      best_count = j - i;
      best = values[i];
    }
    i = j;
  }
  return best;
}

// Up to `limit` non-interpolated widths/heights walking outward from
// `start` in direction `step` (-1 left, +1 right).
void collect_real_extents(const Track& track, std::ptrdiff_t start, int step,
                          int limit, std::vector<double>& widths,
                          std::vector<double>& heights) {
  int taken = 0;
  for (std::ptrdiff_t i = start;
       i >= 0 && i < static_cast<std::ptrdiff_t>(track.observations.size()) &&
       taken < limit;
       i += step) {
    const TrackObservation& obs = track.observations[static_cast<std::size_t>(i)];
    if (obs.interpolated) continue;
    widths.push_back(obs.box.w);
    heights.push_back(obs.box.h);
    ++taken;
  }
}

}  // namespace

std::vector<Gap> detect_gaps(const Track& track, double iou_threshold) {
  std::vector<Gap> gaps;
  if (track.observations.size() < 2) return gaps;
  for (std::size_t i = 0; i + 1 < track.observations.size(); ++i) {
    const TrackObservation& prev = track.observations[i];
    const TrackObservation& next = track.observations[i + 1];
    require(prev.frame < next.frame, "track frames must be strictly increasing");
    if (next.frame - prev.frame > 1) {
      Gap gap{track.player_id, prev.frame, next.frame, {}};
      for (int t = prev.frame + 1; t < next.frame; ++t) gap.missing.push_back(t);
      gaps.push_back(std::move(gap));
    } else if (iou(prev.box, next.box) < iou_threshold) {
      gaps.push_back(Gap{track.player_id, prev.frame, next.frame, {}});
    }
  }
  return gaps;
}

std::pair<double, double> interpolation_weights(int t_prev, int t_next, int t_mid) {
  require(t_prev < t_mid && t_mid < t_next,
          "interpolation frame must lie strictly between its anchors");
  const double span = static_cast<double>(t_next) - static_cast<double>(t_prev);
  return {(t_next - t_mid) / span, (t_mid - t_prev) / span};
}

TrackObservation interpolate_box(const BoundingBox& prev_box, int t_prev,
                                 const BoundingBox& next_box, int t_next,
                                 int t_mid, double mode_width, double mode_height) {
  const auto [w_prev, w_next] = interpolation_weights(t_prev, t_next, t_mid);
  BoundingBox box;
  box.x = w_prev * prev_box.x + w_next * next_box.x;
  box.y = w_prev * prev_box.y + w_next * next_box.y;
  box.w = mode_width;
  box.h = mode_height;
  return TrackObservation{t_mid, box, true};
}

Track fill_track(const Track& track, int neighborhood) {
  require(neighborhood == 3 || neighborhood == 5 || neighborhood == 7 ||
              neighborhood == 9,
          "interpolation neighborhood must be one of 3, 5, 7, 9");
  Track filled{track.player_id, {}};
  filled.observations.reserve(track.observations.size());
  for (std::size_t i = 0; i < track.observations.size(); ++i) {
    const TrackObservation& obs = track.observations[i];
    filled.observations.push_back(obs);
    if (i + 1 >= track.observations.size()) continue;
    const TrackObservation& next = track.observations[i + 1];
    require(obs.frame < next.frame, "track frames must be strictly increasing");
    const int missing = next.frame - obs.frame - 1;
    if (missing < 1 || missing > neighborhood) continue;
    if (obs.interpolated || next.interpolated) continue;

    std::vector<double> widths;
    std::vector<double> heights;
    collect_real_extents(track, static_cast<std::ptrdiff_t>(i), -1, neighborhood,
                         widths, heights);
    collect_real_extents(track, static_cast<std::ptrdiff_t>(i) + 1, +1,
                         neighborhood, widths, heights);
    const double w_mode = mode_smallest(widths);
    const double h_mode = mode_smallest(heights);
    for (int t = obs.frame + 1; t < next.frame; ++t) {
      filled.observations.push_back(
          interpolate_box(obs.box, obs.frame, next.box, next.frame, t, w_mode, h_mode));
    }
  }
  return filled;
}

std::vector<Track> tracks_from_frames(const std::vector<DetectionFrame>& frames) {
  std::map<int, Track> by_player;
  for (const DetectionFrame& frame : frames) {
    for (const Detection& det : frame.boxes) {
      Track& track = by_player[det.player_id];
      track.player_id = det.player_id;
      if (!track.observations.empty()) {
        require(track.observations.back().frame < frame.frame,
                "detection frames must be strictly increasing");
      }
      track.observations.push_back(TrackObservation{frame.frame, det.box, false});
    }
  }
  std::vector<Track> tracks;
  tracks.reserve(by_player.size());
  for (auto& [id, track] : by_player) tracks.push_back(std::move(track));
  return tracks;
}

std::vector<DetectionFrame> frames_from_tracks(const std::vector<Track>& tracks,
                                               int frame_begin, int frame_end) {
  require(frame_begin <= frame_end, "frame range must be non-decreasing");
  std::vector<DetectionFrame> frames(static_cast<std::size_t>(frame_end - frame_begin));
  for (std::size_t i = 0; i < frames.size(); ++i) {
    frames[i].frame = frame_begin + static_cast<int>(i);
  }
  for (const Track& track : tracks) {
    for (const TrackObservation& obs : track.observations) {
      if (obs.frame < frame_begin || obs.frame >= frame_end) continue;
      frames[static_cast<std::size_t>(obs.frame - frame_begin)].boxes.push_back(
          Detection{track.player_id, obs.box});
    }
  }
  for (DetectionFrame& frame : frames) {
    std::sort(frame.boxes.begin(), frame.boxes.end(),
              [](const Detection& a, const Detection& b) {
                return a.player_id < b.player_id;
              });
  }
  return frames;
}

}  // namespace playpack
