#include "thermal_sense/model_io.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::io {
namespace {

using namespace thermal_sense::classifiers;

void put(std::string& out, std::string_view key, std::string_view value) {
  out += key;
  out += ": ";
  out += value;
  out += '\n';
}

template <typename Range>
std::string join(const Range& values) {
  std::string s;
  bool first = true;
  for (double v : values) {
    if (!first) s += ' ';
    s += format_shortest(v);
    first = false;
  }
  return s;
}

// Sequential "key: value" reader that reports positions 1-based.
class Cursor {
 public:
  explicit Cursor(std::vector<std::string_view> lines)
      : lines_(std::move(lines)) {}

  std::string_view next(std::string_view key) {
    const std::size_t line_no = pos_ + 1;
    if (pos_ >= lines_.size()) {
      throw FormatError(line_no, std::string(key), "unexpected end of file");
    }
    const std::string_view line = lines_[pos_++];
    const auto colon = line.find(": ");
    if (colon == std::string_view::npos || line.substr(0, colon) != key) {
      throw FormatError(line_no, std::string(key),
                        "expected '" + std::string(key) + ": ...'");
    }
    return line.substr(colon + 2);
  }

  std::size_t line() const { return pos_; }  // of the last value read
  bool done() const { return pos_ == lines_.size(); }

  long long integer(std::string_view key) {
    const auto v = next(key);
    return parse_int(v, line(), key);
  }

  std::uint64_t unsigned_integer(std::string_view key) {
    const auto v = next(key);
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      throw FormatError(line(), std::string(key), "not an unsigned integer");
    }
    return out;
  }

  double number(std::string_view key) {
    const auto v = next(key);
    return parse_double(v, line(), key);
  }

  std::vector<double> numbers(std::string_view key, std::size_t count) {
    const auto v = next(key);
    const auto parts = split(v, ' ');
    if (parts.size() != count) {
      throw FormatError(line(), std::string(key),
                        "expected " + std::to_string(count) + " values, found " +
                            std::to_string(parts.size()));
    }
    std::vector<double> out;
    out.reserve(count);
    for (auto p : parts) out.push_back(parse_double(p, line(), key));
    return out;
  }

  std::size_t count(std::string_view key, std::size_t lo, std::size_t hi) {
    const auto v = integer(key);
    if (v < static_cast<long long>(lo) || v > static_cast<long long>(hi)) {
      throw FormatError(line(), std::string(key), "value out of range");
    }
    return static_cast<std::size_t>(v);
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

Features to_features(const std::vector<double>& v) {
  Features f{};
  std::copy(v.begin(), v.end(), f.begin());
  return f;
}

void write_standardizer(std::string& out, const Standardizer& s) {
  put(out, "standardizer-mean", join(s.mean));
  put(out, "standardizer-scale", join(s.scale));
}

Standardizer read_standardizer(Cursor& in) {
  Standardizer s;
  s.mean = to_features(in.numbers("standardizer-mean", kPixelCount));
  s.scale = to_features(in.numbers("standardizer-scale", kPixelCount));
  for (double v : s.scale) {
    if (!(v > 0.0)) {
      throw FormatError(in.line(), "standardizer-scale", "must be positive");
    }
  }
  return s;
}

void write_knn(std::string& out, const KnnModel& m) {
  put(out, "k", std::to_string(m.k));
  put(out, "weighting", to_string(m.weighting));
  put(out, "samples", std::to_string(m.features.size()));
  for (std::size_t i = 0; i < m.features.size(); ++i) {
    put(out, "sample",
        std::string(to_string(m.labels[i])) + " " + join(m.features[i]));
  }
}

KnnModel read_knn(Cursor& in) {
  KnnModel m;
  m.k = in.count("k", 1, SIZE_MAX >> 1);
  const auto w = parse_weighting(in.next("weighting"));
  if (!w) throw FormatError(in.line(), "weighting", "unknown weighting");
  m.weighting = *w;
  const auto n = in.count("samples", m.k, SIZE_MAX >> 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = in.next("sample");
    const auto space = v.find(' ');
    const auto label = parse_label(v.substr(0, space));
    if (space == std::string_view::npos || !label) {
      throw FormatError(in.line(), "sample", "expected '<label> <64 values>'");
    }
    const auto parts = split(v.substr(space + 1), ' ');
    if (parts.size() != kPixelCount) {
      throw FormatError(in.line(), "sample", "expected 64 values");
    }
    Features f{};
    for (std::size_t j = 0; j < kPixelCount; ++j) {
      f[j] = parse_double(parts[j], in.line(), "sample");
    }
    m.features.push_back(f);
    m.labels.push_back(*label);
  }
  return m;
}

void write_svm(std::string& out, const SvmModel& m) {
  put(out, "kernel", to_string(m.kernel.kind));
  put(out, "degree", std::to_string(m.kernel.degree));
  put(out, "gamma", format_shortest(m.kernel.gamma));
  put(out, "coef0", format_shortest(m.kernel.coef0));
  put(out, "c", format_shortest(m.c));
  put(out, "bias", format_shortest(m.bias));
  write_standardizer(out, m.standardizer);
  put(out, "support-vectors", std::to_string(m.support_vectors.size()));
  for (std::size_t i = 0; i < m.support_vectors.size(); ++i) {
    put(out, "sv",
        format_shortest(m.alpha[i]) + " " + format_shortest(m.y[i]) + " " +
            join(m.support_vectors[i]));
  }
}

SvmModel read_svm(Cursor& in) {
  SvmModel m;
  const auto kind = parse_kernel(in.next("kernel"));
  if (!kind) throw FormatError(in.line(), "kernel", "unknown kernel");
  m.kernel.kind = *kind;
  m.kernel.degree = static_cast<int>(in.count("degree", 1, 64));
  m.kernel.gamma = in.number("gamma");
  m.kernel.coef0 = in.number("coef0");
  try {
    m.kernel.validate();
  } catch (const ConfigError& e) {
    throw FormatError(in.line(), "kernel", e.what());
  }
  m.c = in.number("c");
  if (!(m.c > 0.0)) throw FormatError(in.line(), "c", "must be positive");
  m.bias = in.number("bias");
  m.standardizer = read_standardizer(in);
  const auto n = in.count("support-vectors", 0, SIZE_MAX >> 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = in.numbers("sv", kPixelCount + 2);
    if (!(v[0] > 0.0) || v[0] > m.c) {
      throw FormatError(in.line(), "sv", "alpha must lie in (0, C]");
    }
    if (v[1] != 1.0 && v[1] != -1.0) {
      throw FormatError(in.line(), "sv", "y must be +1 or -1");
    }
    m.alpha.push_back(v[0]);
    m.y.push_back(v[1]);
    Features f{};
    std::copy(v.begin() + 2, v.end(), f.begin());
    m.support_vectors.push_back(f);
  }
  return m;
}

void write_nn(std::string& out, const NnModel& m) {
  put(out, "hidden", std::to_string(m.hidden));
  put(out, "learning-rate", format_shortest(m.hyperparams.learning_rate));
  put(out, "batch-size", std::to_string(m.hyperparams.batch_size));
  put(out, "epochs", std::to_string(m.hyperparams.epochs));
  put(out, "seed", std::to_string(m.seed));
  write_standardizer(out, m.standardizer);
  for (std::size_t h = 0; h < m.hidden; ++h) {
    put(out, "w1",
        join(std::span<const double>(m.w1).subspan(h * kPixelCount,
                                                   kPixelCount)));
  }
  put(out, "b1", join(m.b1));
  for (std::size_t o = 0; o < 2; ++o) {
    put(out, "w2",
        join(std::span<const double>(m.w2).subspan(o * m.hidden, m.hidden)));
  }
  put(out, "b2", join(m.b2));
}

NnModel read_nn(Cursor& in) {
  const auto hidden = in.count("hidden", 1, kMaxHidden);
  NnModel m = NnModel::zeros(hidden);
  m.hyperparams.learning_rate = in.number("learning-rate");
  m.hyperparams.batch_size = in.count("batch-size", 1, SIZE_MAX >> 1);
  m.hyperparams.epochs = in.count("epochs", 1, SIZE_MAX >> 1);
  m.seed = in.unsigned_integer("seed");
  m.standardizer = read_standardizer(in);
  for (std::size_t h = 0; h < hidden; ++h) {
    const auto row = in.numbers("w1", kPixelCount);
    std::copy(row.begin(), row.end(), m.w1.begin() + static_cast<long>(h * kPixelCount));
  }
  m.b1 = in.numbers("b1", hidden);
  for (std::size_t o = 0; o < 2; ++o) {
    const auto row = in.numbers("w2", hidden);
    std::copy(row.begin(), row.end(), m.w2.begin() + static_cast<long>(o * hidden));
  }
  m.b2 = in.numbers("b2", 2);
  return m;
}

}  // namespace

std::string format_model(const TrainedModel& model) {
  std::string out;
  put(out, "format-version", std::to_string(kModelFormatVersion));
  put(out, "model-kind", family_name(model));
  if (const auto* k = std::get_if<KnnModel>(&model)) write_knn(out, *k);
  if (const auto* s = std::get_if<SvmModel>(&model)) write_svm(out, *s);
  if (const auto* n = std::get_if<NnModel>(&model)) write_nn(out, *n);
  return out;
}

TrainedModel parse_model(std::string_view text) {
  Cursor in(split_lines(text));
  const auto version = in.integer("format-version");
  if (version > kModelFormatVersion || version < 1) {
    throw VersionError("model format-version " + std::to_string(version) +
                       " is not supported (max " +
                       std::to_string(kModelFormatVersion) + ")");
  }
  const auto kind = in.next("model-kind");
  TrainedModel model;
  if (kind == "knn") {
    model = read_knn(in);
  } else if (kind == "svm") {
    model = read_svm(in);
  } else if (kind == "nn") {
    model = read_nn(in);
  } else {
    throw FormatError(2, "model-kind", "unknown model kind");
  }
  if (!in.done()) {
    throw FormatError(in.line() + 1, "trailer", "unexpected trailing content");
  }
  return model;
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  write_file_atomic(path, format_model(model));
}

TrainedModel load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path));
}

}  // namespace thermal_sense::io
