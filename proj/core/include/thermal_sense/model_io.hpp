#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "thermal_sense/model.hpp"

namespace thermal_sense::io {

inline constexpr int kModelFormatVersion = 1;

// Line-oriented "key: value" text. The first two lines are always
// "format-version: N" and "model-kind: knn|svm|nn"; hyperparameters follow,
// then the numeric payload with shortest round-trip decimals.
std::string format_model(const classifiers::TrainedModel& model);

// Throws VersionError for a newer format-version and FormatError for any
// malformed line. Nothing is returned unless the whole file parses.
classifiers::TrainedModel parse_model(std::string_view text);

void save_model(const classifiers::TrainedModel& model,
                const std::filesystem::path& path);
classifiers::TrainedModel load_model(const std::filesystem::path& path);

}  // namespace thermal_sense::io
