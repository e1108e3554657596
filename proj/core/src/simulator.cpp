#include "thermal_sense/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/frame.hpp"
#include "thermal_sense/rng.hpp"

namespace thermal_sense::sim {
namespace {

constexpr double kGridExtent = static_cast<double>(kGridSize);

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Half-extents of a rotated ellipse's bounding box, (rows, cols).
std::pair<double, double> ellipse_half_extents(const PersonConfig& p) {
  const double t = deg_to_rad(p.orientation_deg);
  const double c = std::cos(t), s = std::sin(t);
  const double a = p.semi_major, b = p.semi_minor;
  return {std::sqrt(a * a * c * c + b * b * s * s),
          std::sqrt(a * a * s * s + b * b * c * c)};
}

double gaussian_halo(double excess, double distance, double scale) {
  return excess * std::exp(-(distance * distance) / (2.0 * scale * scale));
}

// Full temperature inside the ellipse; outside, the excess over the room
// decays with the distance to the boundary measured along the center ray.
double body_temperature(const PersonConfig& body, double effective_c,
                        double room_c, double falloff, GridPoint p) {
  const double t = deg_to_rad(body.orientation_deg);
  const double dr = p.row - body.center.row;
  const double dc = p.col - body.center.col;
  const double u = dr * std::cos(t) + dc * std::sin(t);
  const double v = -dr * std::sin(t) + dc * std::cos(t);
  const double r = std::hypot(u / body.semi_major, v / body.semi_minor);
  if (r <= 1.0) return effective_c;
  const double outside = std::hypot(u, v) * (1.0 - 1.0 / r);
  return room_c + gaussian_halo(effective_c - room_c, outside, falloff);
}

// Small objects: the halo scale equals the object's own radius.
double source_temperature(const PointSource& src, double room_c,
                          double falloff, GridPoint p) {
  const double d = std::hypot(p.row - src.center.row, p.col - src.center.col);
  if (d <= src.radius) return src.temp_c;
  return room_c + gaussian_halo(src.temp_c - room_c, d - src.radius, falloff);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void validate_person(const PersonConfig& p) {
  require(std::isfinite(p.center.row) && std::isfinite(p.center.col) &&
              std::isfinite(p.orientation_deg),
          "person geometry must be finite");
  require(p.semi_major > 0.0 && p.semi_minor > 0.0,
          "person semi-axes must be positive");
  require(p.skin_temp_c >= 28.0 && p.skin_temp_c <= 37.0,
          "person skin temperature must lie in [28, 37] degC");
  auto [er, ec] = ellipse_half_extents(p);
  const double eps = 1e-9;
  require(p.center.row - er >= -eps && p.center.row + er <= kGridExtent + eps &&
              p.center.col - ec >= -eps &&
              p.center.col + ec <= kGridExtent + eps,
          "person footprint must lie within the 8x8 field");
}

// Keeps the generated body inside the field even after axis jitter.
GridPoint clamp_center(const PersonConfig& p, GridPoint c) {
  auto [er, ec] = ellipse_half_extents(p);
  return {std::clamp(c.row, er, kGridExtent - er),
          std::clamp(c.col, ec, kGridExtent - ec)};
}

PersonConfig random_person(Rng& rng, const SimulatorParams& params) {
  PersonConfig p;
  const double j = params.axis_jitter;
  p.semi_major = params.semi_major * rng.uniform(1.0 - j, 1.0 + j);
  p.semi_minor = params.semi_minor * rng.uniform(1.0 - j, 1.0 + j);
  p.orientation_deg =
      rng.uniform(-params.orientation_max_deg, params.orientation_max_deg);
  p.skin_temp_c = rng.uniform(params.skin_min_c, params.skin_max_c);
  const GridPoint c{rng.uniform(params.center_row_min, params.center_row_max),
                    rng.uniform(params.center_col_min, params.center_col_max)};
  p.center = clamp_center(p, c);
  return p;
}

// Somebody standing next to the bed, mostly outside the field.
EdgeIntruder random_intruder(Rng& rng, const SimulatorParams& params) {
  EdgeIntruder e;
  e.body.semi_major = params.semi_major;
  e.body.semi_minor = params.semi_minor;
  e.body.orientation_deg = 0.0;
  e.body.skin_temp_c = rng.uniform(params.skin_min_c, params.skin_max_c);
  const double row = rng.uniform(1.0, kGridExtent - 1.0);
  const bool left = rng.uniform() < 0.5;
  const double depth = params.semi_minor * rng.uniform(0.9, 1.4);
  e.body.center = {row, left ? -depth : kGridExtent + depth};
  return e;
}

PointSource random_bottle(Rng& rng, const SimulatorParams& params) {
  PointSource b;
  b.temp_c = params.bottle_temp_c;
  b.radius = params.bottle_radius;
  // Somewhere on the mattress, near a pixel center.
  const double row = std::floor(rng.uniform(1.0, kGridExtent - 1.0)) + 0.5;
  const double col = std::floor(rng.uniform(1.0, kGridExtent - 1.0)) + 0.5;
  b.center = {row + rng.uniform(-0.15, 0.15), col + rng.uniform(-0.15, 0.15)};
  return b;
}

struct FrameRequest {
  Label label;
  ConditionTag condition;
  double room_min_c;
  double room_max_c;
  std::optional<double> duvet_minutes;
  bool bottle = false;
};

LabeledSample generate_frame(const FrameRequest& req, std::uint64_t seed,
                             std::uint64_t index,
                             const SimulatorParams& params) {
  Rng rng = Rng::for_item(seed, index);
  SceneConfig cfg;
  cfg.room_temp_c = rng.uniform(req.room_min_c, req.room_max_c);
  cfg.noise_sigma = params.noise_sigma;
  if (req.label == Label::Person) {
    cfg.person = random_person(rng, params);
    cfg.duvet_minutes = req.duvet_minutes;
  } else if (rng.uniform() < params.edge_intruder_probability) {
    cfg.edge_intruder = random_intruder(rng, params);
  }
  if (req.bottle) cfg.heat_sources.push_back(random_bottle(rng, params));
  cfg.seed = rng.next_u64();
  return make_sample(render(cfg, params), req.label, req.condition);
}

}  // namespace

void SimulatorParams::validate() const {
  require(falloff_scale > 0.0, "falloff_scale must be positive");
  require(supersample >= 1 && supersample <= 16,
          "supersample must lie in [1, 16]");
  require(duvet_initial > 0.0 && duvet_initial <= 1.0,
          "duvet_initial must lie in (0, 1]");
  require(duvet_tau_minutes > 0.0, "duvet_tau_minutes must be positive");
  require(noise_sigma >= 0.0, "noise_sigma must be non-negative");
  require(room_min_c >= 15.0 && room_max_c <= 35.0 && room_min_c <= room_max_c,
          "room temperature range must lie in [15, 35] degC");
  require(hot_room_min_c >= 15.0 && hot_room_max_c <= 35.0 &&
              hot_room_min_c <= hot_room_max_c,
          "hot room temperature range must lie in [15, 35] degC");
  require(skin_min_c >= 28.0 && skin_max_c <= 37.0 && skin_min_c <= skin_max_c,
          "skin temperature range must lie in [28, 37] degC");
  require(semi_major > 0.0 && semi_minor > 0.0, "semi-axes must be positive");
  require(axis_jitter >= 0.0 && axis_jitter < 1.0,
          "axis_jitter must lie in [0, 1)");
  require(orientation_max_deg >= 0.0 && orientation_max_deg <= 90.0,
          "orientation_max_deg must lie in [0, 90]");
  require(center_row_min <= center_row_max && center_col_min <= center_col_max,
          "center ranges must be ordered");
  require(bottle_temp_c <= 45.0, "bottle_temp_c must not exceed 45 degC");
  require(bottle_radius > 0.0, "bottle_radius must be positive");
  require(duvet_minutes_0 >= 0.0 && duvet_minutes_5 >= 0.0 &&
              duvet_minutes_10 >= 0.0,
          "duvet minutes must be non-negative");
  require(edge_intruder_probability >= 0.0 && edge_intruder_probability <= 1.0,
          "edge_intruder_probability must lie in [0, 1]");
}

void validate(const SceneConfig& cfg) {
  require(cfg.room_temp_c >= 15.0 && cfg.room_temp_c <= 35.0,
          "room temperature must lie in [15, 35] degC");
  require(cfg.noise_sigma >= 0.0 && std::isfinite(cfg.noise_sigma),
          "noise sigma must be a non-negative number");
  if (cfg.person) validate_person(*cfg.person);
  if (cfg.duvet_minutes) {
    require(cfg.person.has_value(), "a duvet needs a person under it");
    require(*cfg.duvet_minutes >= 0.0 && std::isfinite(*cfg.duvet_minutes),
            "duvet minutes must be non-negative");
  }
  for (const auto& src : cfg.heat_sources) {
    require(src.temp_c <= 45.0, "heat source temperature must not exceed 45");
    require(src.radius > 0.0, "heat source radius must be positive");
  }
  if (cfg.edge_intruder) {
    const auto& b = cfg.edge_intruder->body;
    require(b.semi_major > 0.0 && b.semi_minor > 0.0,
            "intruder semi-axes must be positive");
  }
}

double duvet_factor(double minutes, double initial, double tau_minutes) {
  if (!(minutes >= 0.0) || !std::isfinite(minutes)) {
    throw InvalidInputError("duvet minutes must be a non-negative number");
  }
  return 1.0 - (1.0 - initial) * std::exp(-minutes / tau_minutes);
}

double scene_temperature(const SceneConfig& cfg, const SimulatorParams& params,
                         GridPoint p) {
  const double room = cfg.room_temp_c;
  double t = room;
  if (cfg.person) {
    double factor = 1.0;
    if (cfg.duvet_minutes) {
      factor = duvet_factor(*cfg.duvet_minutes, params.duvet_initial,
                            params.duvet_tau_minutes);
    }
    const double effective =
        room + (cfg.person->skin_temp_c - room) * factor;
    t = std::max(t, body_temperature(*cfg.person, effective, room,
                                     params.falloff_scale, p));
  }
  if (cfg.edge_intruder) {
    const auto& body = cfg.edge_intruder->body;
    t = std::max(t, body_temperature(body, body.skin_temp_c, room,
                                     params.falloff_scale, p));
  }
  for (const auto& src : cfg.heat_sources) {
    t = std::max(t, source_temperature(src, room, src.radius, p));
  }
  return t;
}

ThermalFrame render(const SceneConfig& cfg, const SimulatorParams& params) {
  validate(cfg);
  params.validate();
  Rng rng(cfg.seed);
  const int n = params.supersample;
  const double step = 1.0 / n;
  Features raw{};
  for (std::size_t r = 0; r < kGridSize; ++r) {
    for (std::size_t c = 0; c < kGridSize; ++c) {
      // Each thermopile integrates over its footprint.
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          sum += scene_temperature(
              cfg, params,
              {static_cast<double>(r) + (i + 0.5) * step,
               static_cast<double>(c) + (j + 0.5) * step});
        }
      }
      double v = sum / (n * n);
      if (cfg.noise_sigma > 0.0) v += cfg.noise_sigma * rng.normal();
      raw[r * kGridSize + c] = v;
    }
  }
  return quantize(raw);
}

Dataset generate_main(std::size_t n_per_class, std::uint64_t seed,
                      const SimulatorParams& params) {
  if (n_per_class == 0) throw InvalidInputError("n_per_class must be >= 1");
  params.validate();
  Dataset ds;
  ds.name = "main";
  ds.samples.reserve(2 * n_per_class);
  std::uint64_t index = 0;
  for (Label label : {Label::Person, Label::NoPerson}) {
    FrameRequest req{label, ConditionTag::Baseline, params.room_min_c,
                     params.room_max_c, std::nullopt, false};
    for (std::size_t i = 0; i < n_per_class; ++i) {
      ds.samples.push_back(generate_frame(req, seed, index++, params));
    }
  }
  return ds;
}

Dataset generate_variational(std::size_t n_per_cell, std::uint64_t seed,
                             const SimulatorParams& params) {
  if (n_per_cell == 0) throw InvalidInputError("n_per_cell must be >= 1");
  if (n_per_cell % 3 != 0) {
    throw InvalidInputError(
        "n_per_cell must be divisible by 3 to split duvet frames over "
        "0/5/10 minutes");
  }
  params.validate();
  Dataset ds;
  ds.name = "variational";
  ds.samples.reserve(6 * n_per_cell);
  std::uint64_t index = 0;
  auto emit = [&](const FrameRequest& req, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      ds.samples.push_back(generate_frame(req, seed, index++, params));
    }
  };

  for (Label label : {Label::Person, Label::NoPerson}) {
    emit({label, ConditionTag::HotRoom, params.hot_room_min_c,
          params.hot_room_max_c, std::nullopt, false},
         n_per_cell);
  }
  for (Label label : {Label::Person, Label::NoPerson}) {
    emit({label, ConditionTag::WaterBottle, params.room_min_c,
          params.room_max_c, std::nullopt, true},
         n_per_cell);
  }
  const std::size_t third = n_per_cell / 3;
  emit({Label::Person, ConditionTag::Duvet0min, params.room_min_c,
        params.room_max_c, params.duvet_minutes_0, false},
       third);
  emit({Label::Person, ConditionTag::Duvet5min, params.room_min_c,
        params.room_max_c, params.duvet_minutes_5, false},
       third);
  emit({Label::Person, ConditionTag::Duvet10min, params.room_min_c,
        params.room_max_c, params.duvet_minutes_10, false},
       third);
  emit({Label::NoPerson, ConditionTag::Duvet0min, params.room_min_c,
        params.room_max_c, std::nullopt, false},
       n_per_cell);
  return ds;
}

}  // namespace thermal_sense::sim
