#include "thermal_sense/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermal_sense/errors.hpp"

namespace thermal_sense {

bool is_valid_temperature(double v) {
  if (!(v >= kMinTempC && v <= kMaxTempC)) return false;
  const double quarters = v * 4.0;
  return quarters == std::floor(quarters);
}

double quantize_temperature(double raw) {
  // Half-way readings (x.125, x.375, ...) round up.
  const double rounded = std::floor(raw * 4.0 + 0.5) / 4.0;
  return std::clamp(rounded, kMinTempC, kMaxTempC);
}

ThermalFrame quantize(const Features& raw) {
  Features out{};
  for (std::size_t i = 0; i < kPixelCount; ++i) {
    if (!std::isfinite(raw[i])) {
      throw InvalidInputError("non-finite reading at pixel " +
                              std::to_string(i) + " (row " +
                              std::to_string(i / kGridSize) + ", col " +
                              std::to_string(i % kGridSize) + ")");
    }
    out[i] = quantize_temperature(raw[i]);
  }
  return ThermalFrame::from_pixels(out);
}

ThermalFrame ThermalFrame::from_pixels(const Features& pixels) {
  for (std::size_t i = 0; i < kPixelCount; ++i) {
    if (!is_valid_temperature(pixels[i])) {
      throw InvalidInputError("pixel " + std::to_string(i) +
                              " is not a quarter-degree value in [20, 100]");
    }
  }
  return ThermalFrame(pixels);
}

Features flatten(const ThermalFrame& frame) { return frame.pixels(); }

ThermalFrame unflatten(const Features& features) {
  return ThermalFrame::from_pixels(features);
}

}  // namespace thermal_sense
