#include "qar/dataset.hpp"

#include "qar/errors.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace qar::data {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      field.push_back(ch);
    } else if (ch == ',' && !quoted) {
      out.push_back(trim(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  out.push_back(trim(field));
  return out;
}

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Integer labels sort numerically, anything else lexicographically.
std::vector<std::string> ordered_labels(const std::vector<ManifestRow>& rows) {
  std::vector<std::string> names;
  for (const auto& r : rows) names.push_back(r.label);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const bool numeric =
      std::all_of(names.begin(), names.end(), [](const std::string& s) { return as_integer(s).has_value(); });
  if (numeric)
    std::sort(names.begin(), names.end(),
              [](const std::string& a, const std::string& b) { return *as_integer(a) < *as_integer(b); });
  return names;
}

// Indices of unassigned samples grouped by label.
std::vector<std::vector<std::size_t>> unassigned_by_class(const Dataset& ds) {
  std::vector<std::vector<std::size_t>> groups(static_cast<std::size_t>(ds.num_classes()));
  for (std::size_t i = 0; i < ds.samples.size(); ++i)
    if (ds.samples[i].split == Split::unassigned)
      groups.at(static_cast<std::size_t>(ds.samples[i].label)).push_back(i);
  return groups;
}

// Draws `count(Nc)` training samples per class; everything else unassigned
// becomes test.
template <class CountFn>
Dataset assign_split(Dataset ds, std::uint64_t seed, CountFn count) {
  ds.validate();
  std::mt19937_64 rng(seed);
  const auto groups = unassigned_by_class(ds);
  for (std::size_t c = 0; c < groups.size(); ++c) {
    std::vector<std::size_t> idx = groups[c];
    if (idx.empty()) continue;
    const std::size_t n_train = count(idx.size(), c, ds);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t t = 0; t < idx.size(); ++t)
      ds.samples[idx[t]].split = t < n_train ? Split::train : Split::test;
  }
  return ds;
}

}  // namespace

Split parse_split(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "test") return Split::test;
  if (s == "auto" || s.empty()) return Split::unassigned;
  throw data_error("unknown split value '" + s + "' (expected train, test or auto)");
}

const char* to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::test: return "test";
    case Split::unassigned: return "auto";
  }
  return "auto";
}

Manifest Manifest::parse(std::istream& in, const std::filesystem::path& root,
                         const std::string& source_name) {
  Manifest m;
  m.source = source_name;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  const auto fail = [&](const std::string& msg) {
    return data_error(source_name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"path", "label", "split"})
        throw fail("expected header 'path,label,split'");
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) throw fail("expected 3 fields, found " + std::to_string(fields.size()));
    if (fields[0].empty()) throw fail("empty path");
    if (fields[1].empty()) throw fail("empty label");
    ManifestRow row;
    std::filesystem::path p(fields[0]);
    row.path = p.is_absolute() ? p : root / p;
    row.label = fields[1];
    try {
      row.split = parse_split(fields[2]);
    } catch (const data_error& e) {
      throw fail(e.what());
    }
    row.line = lineno;
    m.rows.push_back(std::move(row));
  }
  if (!header_seen) throw data_error(source_name + ": empty manifest");
  return m;
}

Manifest Manifest::read(const std::filesystem::path& csv) {
  std::ifstream in(csv);
  if (!in) throw data_error("cannot open manifest " + csv.string());
  Manifest m = parse(in, csv.parent_path(), csv.string());
  m.source = csv;
  return m;
}

std::vector<std::size_t> Dataset::indices(Split s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (samples[i].split == s) out.push_back(i);
  return out;
}

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> out(class_names.size(), 0);
  for (const auto& s : samples) ++out.at(static_cast<std::size_t>(s.label));
  return out;
}

void Dataset::validate() const {
  const Index q = pixels();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.x.size() != q || s.x.v1.size() != q || s.x.v2.size() != q || s.x.v3.size() != q ||
        s.x.v0.size() != q)
      throw data_error("sample " + std::to_string(i) + " has an inconsistent pixel count");
    if (s.label < 0 || s.label >= num_classes())
      throw data_error("sample " + std::to_string(i) + " has label outside 0.." +
                       std::to_string(num_classes() - 1));
  }
}

QuaternionVector load_image(const std::filesystem::path& path, int height, int width) {
  if (height < 1 || width < 1) throw config_error("image size must be positive");
  // IMREAD_COLOR converts grayscale and palette images to 8-bit BGR and
  // drops alpha.
  cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty()) throw data_error("cannot decode image " + path.string());
  if (bgr.rows != height || bgr.cols != width) {
    cv::Mat resized;
    cv::resize(bgr, resized, cv::Size(width, height), 0, 0, cv::INTER_LINEAR);
    bgr = resized;
  }
  const Index q = static_cast<Index>(height) * width;
  Vector r(q), g(q), b(q);
  for (int y = 0; y < height; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < width; ++x) {
      const Index p = static_cast<Index>(y) * width + x;
      b(p) = row[x][0] / 255.0;
      g(p) = row[x][1] / 255.0;
      r(p) = row[x][2] / 255.0;
    }
  }
  return encode_rgb(r, g, b);
}

Dataset load_dataset(const Manifest& manifest) {
  if (manifest.rows.empty()) throw data_error(manifest.source.string() + ": manifest has no rows");
  Dataset ds;
  ds.height = manifest.height;
  ds.width = manifest.width;
  ds.class_names = ordered_labels(manifest.rows);
  std::map<std::string, int> label_index;
  for (std::size_t c = 0; c < ds.class_names.size(); ++c)
    label_index[ds.class_names[c]] = static_cast<int>(c);

  const auto n = static_cast<std::ptrdiff_t>(manifest.rows.size());
  ds.samples.resize(manifest.rows.size());
  std::vector<std::string> errors(manifest.rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& row = manifest.rows[static_cast<std::size_t>(i)];
    try {
      ds.samples[static_cast<std::size_t>(i)] = {load_image(row.path, manifest.height, manifest.width),
                                                  label_index.at(row.label), row.split};
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] =
          manifest.source.string() + ":" + std::to_string(row.line) + ": " + e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw data_error(e);
  return ds;
}

Dataset split_per_class(Dataset ds, int n_train, std::uint64_t seed) {
  if (n_train < 1) throw config_error("per-class training count must be >= 1");
  return assign_split(std::move(ds), seed, [n_train](std::size_t size, std::size_t c, const Dataset& d) {
    if (size <= static_cast<std::size_t>(n_train))
      throw data_error("class '" + d.class_names[c] + "' has " + std::to_string(size) +
                       " samples; need more than " + std::to_string(n_train));
    return static_cast<std::size_t>(n_train);
  });
}

Dataset split_percent(Dataset ds, double percent, std::uint64_t seed) {
  if (!(percent > 0.0 && percent < 100.0)) throw config_error("split percent must lie in (0, 100)");
  return assign_split(std::move(ds), seed, [percent](std::size_t size, std::size_t c, const Dataset& d) {
    if (size < 2)
      throw data_error("class '" + d.class_names[c] + "' has fewer than 2 samples; cannot split");
    const auto wanted = static_cast<long long>(std::llround(percent * static_cast<double>(size) / 100.0));
    return static_cast<std::size_t>(std::clamp<long long>(wanted, 1, static_cast<long long>(size) - 1));
  });
}

Dataset add_gaussian_noise(Dataset ds, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw config_error("noise sigma must be >= 0");
  if (sigma == 0.0) return ds;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  const auto perturb = [&](Vector& channel) {
    for (Index p = 0; p < channel.size(); ++p) channel(p) = std::clamp(channel(p) + noise(rng), 0.0, 1.0);
  };
  for (auto& s : ds.samples) {
    if (s.split != Split::test) continue;
    perturb(s.x.v1);
    perturb(s.x.v2);
    perturb(s.x.v3);
  }
  return ds;
}

QuaternionVector normalized(const QuaternionVector& v) {
  const double n = std::sqrt(v.v0.squaredNorm() + v.v1.squaredNorm() + v.v2.squaredNorm() +
                             v.v3.squaredNorm());
  if (n == 0.0) return v;
  return QuaternionVector(v.v0 / n, v.v1 / n, v.v2 / n, v.v3 / n);
}

Vector grayscale(const QuaternionVector& v) {
  Vector g = (v.v1 + v.v2 + v.v3) / 3.0;
  const double n = g.norm();
  if (n > 0.0) g /= n;
  return g;
}

Matrix Dictionary::stacked() const {
  const Index q = atoms.rows();
  Matrix out(4 * q, atoms.cols());
  out << atoms.V0, atoms.V1, atoms.V2, atoms.V3;
  return out;
}

Matrix Dictionary::grayscale() const {
  Matrix out(atoms.rows(), atoms.cols());
  for (Index c = 0; c < atoms.cols(); ++c) out.col(c) = data::grayscale(atoms.col(c));
  return out;
}

Dictionary build_dictionary(const Dataset& ds, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw data_error("build_dictionary: no training samples");
  Dictionary d{QuaternionMatrix(ds.pixels(), static_cast<Index>(indices.size())), {}};
  d.labels.reserve(indices.size());
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const Sample& s = ds.samples.at(indices[t]);
    d.atoms.set_col(static_cast<Index>(t), normalized(s.x));
    d.labels.push_back(s.label);
  }
  return d;
}

}  // namespace qar::data
