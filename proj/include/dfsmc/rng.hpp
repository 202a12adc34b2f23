#ifndef DFSMC_RNG_HPP
#define DFSMC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace dfsmc {

// All randomness in the project flows through seeds derived from a base seed
// and a purpose string (plus optional stream indices). This keeps results
// independent of call order and thread scheduling.
uint64_t splitmix64(uint64_t x);
uint64_t derive_seed(uint64_t base, std::string_view purpose);
uint64_t derive_seed(uint64_t base, std::string_view purpose, uint64_t index);
uint64_t derive_seed(uint64_t base, std::string_view purpose, uint64_t index,
                     uint64_t subindex);

// mt19937_64 with pinned value mappings. std::uniform_* distributions are
// implementation-defined, so the mappings live here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0,1)
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // [lo,hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // [lo,hi] inclusive
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool coin() { return (next_u64() >> 63) != 0; }

  // standard normal via Box-Muller
  double gaussian();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fisher-Yates with pinned draws.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.uniform_int(0, static_cast<int>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace dfsmc

#endif
