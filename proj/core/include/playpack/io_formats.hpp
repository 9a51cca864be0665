/*
 * File formats: detection and flow ingestion, angle-series and segment
 * emission, and the summary cut list plus its external trim script.
 *
 * All formats are line-delimited structured text. Writers are deterministic
 * (identical inputs give byte-identical files) and land atomically via a
 * temp-file rename; every reader inverts its writer exactly.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "playpack/changepoint.hpp"
#include "playpack/motion_features.hpp"
#include "playpack/selection.hpp"
#include "playpack/types.hpp"

namespace playpack {

struct SequenceMeta {
  double fps = 25.0;
  int width = 720;
  int height = 400;
  int frame_count = 0;

  void validate() const;

  friend bool operator==(const SequenceMeta&, const SequenceMeta&) = default;
};

struct DetectionData {
  SequenceMeta meta;
  std::vector<DetectionFrame> frames;  // sparse; absent frames mean no boxes
};

struct SegmentsData {
  SequenceMeta meta;
  std::vector<EventSegment> segments;
};

struct PlanData {
  SequenceMeta meta;
  SummaryPlan plan;
  std::string warning;
};

// Detections: a JSON header record {fps, width, height, frame_count} followed
// by one record per frame, {"frame": i, "players": [{id, x, y, w, h}...]}.
// Frame indices must be strictly increasing; holes mean empty frames.
DetectionData read_detections(const std::filesystem::path& path);
void write_detections(const DetectionData& data, const std::filesystem::path& path);

// Flows: one record per sample, {"frame", "px", "py", "angle", "mag"}.
// Angles are normalized into [0, 360) on read; negative magnitudes are
// rejected.
std::vector<FlowSample> read_flows(const std::filesystem::path& path);
void write_flows(const std::vector<FlowSample>& flows,
                 const std::filesystem::path& path);

// Angle series: two columns per line, frame index and label.
void write_series(const AngleSeries& series, const std::filesystem::path& path);
AngleSeries read_series(const std::filesystem::path& path);

// Segments: header record plus {"start", "end", "label"} per segment.
void write_segments(const SegmentsData& data, const std::filesystem::path& path);
SegmentsData read_segments(const std::filesystem::path& path);

// Summary plan. The cut list holds a header record plus one record per clip:
// {start_frame, end_frame, label, utility, start_seconds, end_seconds} with
// seconds = frame / fps. The script is a plain-shell trim/concat procedure
// for an external video tool; the source file is a runtime placeholder.
void write_plan(const SummaryPlan& plan, const SequenceMeta& meta,
                const std::filesystem::path& cut_list_path,
                const std::filesystem::path& script_path,
                const std::string& warning = {});
PlanData read_plan(const std::filesystem::path& path);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// Writes `content` to a sibling temp file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace playpack
