#pragma once

#include "thermal_sense/types.hpp"

namespace thermal_sense {

// Rounds each raw reading to the nearest quarter degree (halfway cases go
// up) and clamps into [20, 100]. Throws InvalidInputError naming the first
// non-finite pixel.
ThermalFrame quantize(const Features& raw);

// Quantizes a single reading; same rule as quantize().
double quantize_temperature(double raw);

// Row-major flattening; pixel (r, c) lands at index 8 * r + c.
Features flatten(const ThermalFrame& frame);

// Inverse of flatten(). Throws InvalidInputError on an invalid vector.
ThermalFrame unflatten(const Features& features);

}  // namespace thermal_sense
