#include "dfsmc/manifest.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dfsmc/rng.hpp"

namespace fs = std::filesystem;

namespace dfsmc {

const char* split_name(Split s) { return s == Split::train ? "train" : "test"; }

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::train;
  if (name == "test") return Split::test;
  throw std::runtime_error("unknown split tag: " + name);
}

std::vector<std::string> DatasetManifest::family_names() const {
  std::vector<std::string> names(family_count);
  for (const auto& r : records) {
    if (r.family_index >= 0 && r.family_index < family_count) {
      names[r.family_index] = r.family_name;
    }
  }
  return names;
}

size_t DatasetManifest::count(Split s) const {
  size_t n = 0;
  for (const auto& r : records) {
    if (r.split == s) ++n;
  }
  return n;
}

namespace {

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".pgm" || ext == ".png";
}

}  // namespace

DatasetManifest build_manifest(const fs::path& root_dir) {
  if (!fs::is_directory(root_dir)) {
    throw std::runtime_error("dataset root is not a directory: " +
                             root_dir.string());
  }
  std::vector<std::string> families;
  for (const auto& entry : fs::directory_iterator(root_dir)) {
    if (entry.is_directory()) families.push_back(entry.path().filename().string());
  }
  if (families.empty()) {
    throw std::runtime_error("dataset root contains no family directories: " +
                             root_dir.string());
  }
  std::sort(families.begin(), families.end());

  DatasetManifest m;
  m.family_count = static_cast<int>(families.size());
  for (int fi = 0; fi < m.family_count; ++fi) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(root_dir / families[fi])) {
      if (entry.is_regular_file() && is_image_file(entry.path())) {
        files.push_back(entry.path().filename().string());
      }
    }
    if (files.empty()) {
      throw std::runtime_error("family with zero samples: " + families[fi]);
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      SampleRecord r;
      r.image_path = families[fi] + "/" + f;
      r.family_name = families[fi];
      r.family_index = fi;
      r.split = Split::train;
      m.records.push_back(std::move(r));
    }
  }
  return m;
}

DatasetManifest stratified_split(const DatasetManifest& manifest, double ratio,
                                 uint64_t seed,
                                 std::vector<std::string>* warnings) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw std::runtime_error("split ratio must be in (0,1]");
  }
  DatasetManifest out = manifest;
  out.seed = seed;
  out.ratio = ratio;

  std::map<int, std::vector<size_t>> by_family;
  for (size_t i = 0; i < out.records.size(); ++i) {
    by_family[out.records[i].family_index].push_back(i);
  }
  for (auto& [family, indices] : by_family) {
    Rng rng(derive_seed(seed, "split", static_cast<uint64_t>(family)));
    std::vector<size_t> order = indices;
    shuffle(order, rng);
    // floor(ratio*n) with a guard so exact products (e.g. 0.6*80) are not
    // pushed below the integer by representation error
    size_t n_train = static_cast<size_t>(
        std::floor(ratio * static_cast<double>(order.size()) + 1e-9));
    if (n_train == 0 && warnings) {
      warnings->push_back("family '" + out.records[indices[0]].family_name +
                          "' contributes no train samples at ratio " +
                          std::to_string(ratio));
    }
    for (size_t k = 0; k < order.size(); ++k) {
      out.records[order[k]].split = k < n_train ? Split::train : Split::test;
    }
  }
  return out;
}

void write_manifest(const DatasetManifest& manifest, const fs::path& path) {
  std::ofstream outf(path, std::ios::trunc);
  if (!outf) {
    throw std::runtime_error("cannot open manifest for writing: " + path.string());
  }
  char header[128];
  std::snprintf(header, sizeof(header),
                "# dfsmc-manifest v1 seed=%" PRIu64 " ratio=%.17g",
                manifest.seed, manifest.ratio);
  outf << header << "\n";
  for (const auto& r : manifest.records) {
    outf << r.image_path << "\t" << r.family_name << "\t" << r.family_index
         << "\t" << split_name(r.split) << "\n";
  }
  if (!outf) throw std::runtime_error("manifest write failed: " + path.string());
}

DatasetManifest read_manifest(const fs::path& path) {
  std::ifstream inf(path);
  if (!inf) throw std::runtime_error("cannot open manifest: " + path.string());
  std::string line;
  if (!std::getline(inf, line)) {
    throw std::runtime_error("empty manifest file: " + path.string());
  }
  DatasetManifest m;
  {
    uint64_t seed = 0;
    double ratio = 0.0;
    if (std::sscanf(line.c_str(), "# dfsmc-manifest v1 seed=%" SCNu64 " ratio=%lf",
                    &seed, &ratio) != 2) {
      throw std::runtime_error("bad manifest header: " + line);
    }
    m.seed = seed;
    m.ratio = ratio;
  }
  std::map<std::string, int> family_of;
  std::set<std::string> seen_paths;
  int max_index = -1;
  size_t line_no = 1;
  while (std::getline(inf, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    SampleRecord r;
    std::string index_str, split_str;
    if (!std::getline(ss, r.image_path, '\t') ||
        !std::getline(ss, r.family_name, '\t') ||
        !std::getline(ss, index_str, '\t') || !std::getline(ss, split_str)) {
      throw std::runtime_error("bad manifest record at line " +
                               std::to_string(line_no));
    }
    r.family_index = std::stoi(index_str);
    r.split = split_from_name(split_str);
    if (!seen_paths.insert(r.image_path).second) {
      throw std::runtime_error("duplicate path in manifest: " + r.image_path);
    }
    auto [it, inserted] = family_of.emplace(r.family_name, r.family_index);
    if (!inserted && it->second != r.family_index) {
      throw std::runtime_error("inconsistent family index for " + r.family_name);
    }
    max_index = std::max(max_index, r.family_index);
    m.records.push_back(std::move(r));
  }
  m.family_count = max_index + 1;
  return m;
}

}  // namespace dfsmc
