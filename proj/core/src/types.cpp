/*
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "playpack/types.hpp"

#include <algorithm>
#include <cmath>

#include "playpack/error.hpp"

namespace playpack {

std::optional<AngleLabel> try_label_from_degrees(int degrees) {
  for (AngleLabel label : kAngleLabels) {
    if (to_degrees(label) == degrees) return label;
  }
  return std::nullopt;
}

AngleLabel label_from_degrees(int degrees) {
  auto label = try_label_from_degrees(degrees);
  require(label.has_value(), "angle label must be one of 0,45,...,315,360");
  return *label;
}

bool BoundingBox::valid() const {
  return w > 0.0 && h > 0.0 && std::isfinite(x) && std::isfinite(y) &&
         std::isfinite(w) && std::isfinite(h);
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  require(a.valid() && b.valid(), "iou requires valid boxes");
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return inter / uni;
}

std::vector<DetectionFrame> prune_detections(std::vector<DetectionFrame> frames,
                                             double min_width) {
  for (DetectionFrame& frame : frames) {
    std::erase_if(frame.boxes, [min_width](const Detection& d) {
      return !(d.box.h > d.box.w && d.box.w > min_width);
    });
  }
  return frames;
}

}  // namespace playpack
