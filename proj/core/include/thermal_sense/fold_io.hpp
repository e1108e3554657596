#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "thermal_sense/types.hpp"

namespace thermal_sense::io {

inline constexpr int kFoldPlanFormatVersion = 1;

std::string format_fold_plan(const FoldPlan& plan);
FoldPlan parse_fold_plan(std::string_view text);

void save_fold_plan(const FoldPlan& plan, const std::filesystem::path& path);
FoldPlan load_fold_plan(const std::filesystem::path& path);

}  // namespace thermal_sense::io
