#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/simulator.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::sim {
namespace {

struct DoubleKey {
  std::string_view name;
  double SimulatorParams::*field;
};

constexpr DoubleKey kDoubleKeys[] = {
    {"falloff_scale", &SimulatorParams::falloff_scale},
    {"duvet_initial", &SimulatorParams::duvet_initial},
    {"duvet_tau_minutes", &SimulatorParams::duvet_tau_minutes},
    {"noise_sigma", &SimulatorParams::noise_sigma},
    {"room_min_c", &SimulatorParams::room_min_c},
    {"room_max_c", &SimulatorParams::room_max_c},
    {"hot_room_min_c", &SimulatorParams::hot_room_min_c},
    {"hot_room_max_c", &SimulatorParams::hot_room_max_c},
    {"skin_min_c", &SimulatorParams::skin_min_c},
    {"skin_max_c", &SimulatorParams::skin_max_c},
    {"semi_major", &SimulatorParams::semi_major},
    {"semi_minor", &SimulatorParams::semi_minor},
    {"axis_jitter", &SimulatorParams::axis_jitter},
    {"orientation_max_deg", &SimulatorParams::orientation_max_deg},
    {"center_row_min", &SimulatorParams::center_row_min},
    {"center_row_max", &SimulatorParams::center_row_max},
    {"center_col_min", &SimulatorParams::center_col_min},
    {"center_col_max", &SimulatorParams::center_col_max},
    {"bottle_temp_c", &SimulatorParams::bottle_temp_c},
    {"bottle_radius", &SimulatorParams::bottle_radius},
    {"duvet_minutes_0", &SimulatorParams::duvet_minutes_0},
    {"duvet_minutes_5", &SimulatorParams::duvet_minutes_5},
    {"duvet_minutes_10", &SimulatorParams::duvet_minutes_10},
    {"edge_intruder_probability", &SimulatorParams::edge_intruder_probability},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

SimulatorParams parse_params(const std::string& text) {
  SimulatorParams params;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line(text.data() + pos,
                          (end == std::string::npos ? text.size() : end) - pos);
    pos = (end == std::string::npos) ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("simulator config line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      if (key == "supersample") {
        params.supersample =
            static_cast<int>(io::parse_int(value, line_no, key));
        continue;
      }
      bool known = false;
      for (const auto& k : kDoubleKeys) {
        if (k.name == key) {
          params.*(k.field) = io::parse_double(value, line_no, key);
          known = true;
          break;
        }
      }
      if (!known) {
        throw ConfigError("simulator config line " + std::to_string(line_no) +
                          ": unknown key '" + std::string(key) + "'");
      }
    } catch (const FormatError& e) {
      throw ConfigError(std::string("simulator config ") + e.what());
    }
  }
  params.validate();
  return params;
}

SimulatorParams load_params(const std::filesystem::path& path) {
  return parse_params(io::read_file(path));
}

std::string format_params(const SimulatorParams& params) {
  std::string out;
  out += "supersample=" + std::to_string(params.supersample) + "\n";
  for (const auto& k : kDoubleKeys) {
    out += std::string(k.name) + "=" + io::format_shortest(params.*(k.field)) +
           "\n";
  }
  return out;
}

}  // namespace thermal_sense::sim
