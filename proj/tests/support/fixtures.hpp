#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <unistd.h>

#include "thermal_sense/rng.hpp"
#include "thermal_sense/types.hpp"

namespace thermal_sense::testing {

// A sample whose pixels are all `fill` except the leading ones given.
inline LabeledSample sample(Label label, std::initializer_list<double> head,
                            double fill = 20.0,
                            ConditionTag tag = ConditionTag::Baseline) {
  LabeledSample s;
  s.features.fill(fill);
  std::size_t i = 0;
  for (double v : head) s.features[i++] = v;
  s.label = label;
  s.condition = tag;
  return s;
}

// Two Gaussian blobs in 64 dimensions. `gap` is the distance between the
// class means along every axis; small gaps overlap.
inline Dataset gaussian_blobs(std::size_t per_class, double gap,
                              std::uint64_t seed) {
  Rng rng(seed);
  Dataset ds{"blobs", {}};
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    LabeledSample s;
    s.label = i % 2 == 0 ? Label::Person : Label::NoPerson;
    const double centre = s.label == Label::Person ? gap / 2 : -gap / 2;
    for (double& v : s.features) v = 25.0 + centre + rng.normal();
    ds.samples.push_back(s);
  }
  return ds;
}

// Quarter-degree features on a tiny range so that distance ties happen.
inline Features coarse_features(Rng& rng, std::size_t levels) {
  Features f;
  for (double& v : f) v = 20.0 + 0.25 * static_cast<double>(rng.index(levels));
  return f;
}

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("thermal_sense_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter()++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::filesystem::path path_;
};

}  // namespace thermal_sense::testing
