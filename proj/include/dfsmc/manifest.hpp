#ifndef DFSMC_MANIFEST_HPP
#define DFSMC_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace dfsmc {

enum class Split { train, test };

const char* split_name(Split s);
Split split_from_name(const std::string& name);

struct SampleRecord {
  std::string image_path;  // relative to the dataset root, '/' separated
  std::string family_name;
  int family_index = 0;
  Split split = Split::train;
  bool operator==(const SampleRecord&) const = default;
};

struct DatasetManifest {
  std::vector<SampleRecord> records;
  int family_count = 0;
  uint64_t seed = 0;
  double ratio = 0.6;

  std::vector<std::string> family_names() const;  // by family_index
  size_t count(Split s) const;
};

// Scans root_dir for one subdirectory per family (each holding .pgm/.png
// files) and builds one record per image. family_index is dense and assigned
// in lexicographic family-name order; file order within a family is
// lexicographic, so the result is independent of filesystem enumeration
// order. All records start in the train split.
DatasetManifest build_manifest(const std::filesystem::path& root_dir);

// Within each family, records are shuffled by a PRNG seeded from
// (seed, family_index) and the first floor(ratio*n) are marked train, the
// rest test. Record order in the result is unchanged. A family whose train
// share is zero produces a warning, not an error.
DatasetManifest stratified_split(const DatasetManifest& manifest, double ratio,
                                 uint64_t seed,
                                 std::vector<std::string>* warnings = nullptr);

// Text format: header "# dfsmc-manifest v1 seed=<u64> ratio=<f64>" followed
// by one tab-separated record per line: path, family name, family index,
// split tag.
void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path);
DatasetManifest read_manifest(const std::filesystem::path& path);

}  // namespace dfsmc

#endif
