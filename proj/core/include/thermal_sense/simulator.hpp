#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "thermal_sense/types.hpp"

namespace thermal_sense::sim {

// Continuous grid coordinates: pixel (r, c) covers [r, r+1) x [c, c+1), so
// the visible field is [0, 8) on both axes.
struct GridPoint {
  double row = 0.0;
  double col = 0.0;
};

struct PersonConfig {
  GridPoint center{4.0, 4.0};
  double orientation_deg = 0.0;  // major axis angle from the row axis
  double semi_major = 2.8;       // grid units, along the body
  double semi_minor = 1.2;
  double skin_temp_c = 32.0;     // apparent surface temperature
};

struct PointSource {
  GridPoint center{4.0, 4.0};
  double radius = 0.35;  // grid units
  double temp_c = 37.0;
};

// A body partly visible at the border of the field of view: an ellipse whose
// center lies outside the grid. Its footprint is not validated.
struct EdgeIntruder {
  PersonConfig body;
};

struct SceneConfig {
  double room_temp_c = 20.5;
  std::optional<PersonConfig> person;
  std::vector<PointSource> heat_sources;
  std::optional<double> duvet_minutes;
  std::optional<EdgeIntruder> edge_intruder;
  double noise_sigma = 0.1;
  std::uint64_t seed = 0;
};

// Tunable model constants plus the randomization ranges used by the dataset
// generators. Loaded from a flat key=value file (see load_params).
struct SimulatorParams {
  // Thermal model.
  double falloff_scale = 1.0;  // grid units of the Gaussian halo
  int supersample = 4;         // sub-samples per pixel edge
  double duvet_initial = 0.35;
  double duvet_tau_minutes = 4.0;
  double noise_sigma = 0.1;

  // Baseline and perturbed room temperatures.
  double room_min_c = 20.0;
  double room_max_c = 21.0;
  double hot_room_min_c = 24.0;
  double hot_room_max_c = 25.0;

  // Person randomization.
  double skin_min_c = 30.0;
  double skin_max_c = 34.0;
  double semi_major = 2.8;
  double semi_minor = 1.2;
  double axis_jitter = 0.15;  // relative
  double orientation_max_deg = 25.0;
  double center_row_min = 3.0;
  double center_row_max = 4.5;
  double center_col_min = 2.5;
  double center_col_max = 5.0;

  // Warm-object (water bottle) source.
  double bottle_temp_c = 37.0;
  double bottle_radius = 0.35;

  // Duvet minutes used for the three duvet conditions.
  double duvet_minutes_0 = 0.0;
  double duvet_minutes_5 = 5.0;
  double duvet_minutes_10 = 10.0;

  // Probability that an empty-bed frame shows someone at the border.
  double edge_intruder_probability = 0.0;

  // Throws ConfigError on out-of-range values.
  void validate() const;
};

// key=value, '#' comments, blank lines ignored. Unknown keys and malformed
// values throw ConfigError; keys not mentioned keep their defaults.
SimulatorParams parse_params(const std::string& text);
SimulatorParams load_params(const std::filesystem::path& path);
// Every key with its current value, one per line, in a stable order.
std::string format_params(const SimulatorParams& params);

// Throws ConfigError if the scene violates its invariants.
void validate(const SceneConfig& cfg);

// Transmission of skin heat through a duvet that has been on for `minutes`:
// 1 - (1 - initial) * exp(-minutes / tau). Throws InvalidInputError on
// negative or non-finite minutes.
double duvet_factor(double minutes, double initial = 0.35,
                    double tau_minutes = 4.0);

// Temperature field before noise/quantization at a continuous grid point.
double scene_temperature(const SceneConfig& cfg, const SimulatorParams& params,
                         GridPoint p);

ThermalFrame render(const SceneConfig& cfg,
                    const SimulatorParams& params = SimulatorParams{});

// n_per_class Person frames followed by n_per_class NoPerson frames, all
// tagged Baseline. Frame i is seeded from (seed, i).
Dataset generate_main(std::size_t n_per_class, std::uint64_t seed,
                      const SimulatorParams& params = SimulatorParams{});

// HotRoom, WaterBottle and Duvet blocks, each n_per_cell Person frames then
// n_per_cell NoPerson frames. Duvet Person frames are split evenly over the
// 0/5/10 minute tags; empty-bed duvet frames carry Duvet0min. n_per_cell
// must be divisible by 3.
Dataset generate_variational(std::size_t n_per_cell, std::uint64_t seed,
                             const SimulatorParams& params = SimulatorParams{});

}  // namespace thermal_sense::sim
