#include "dfsmc/rng.hpp"

#include <cmath>

namespace dfsmc {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

static uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t derive_seed(uint64_t base, std::string_view purpose) {
  return splitmix64(base ^ splitmix64(fnv1a(purpose)));
}

uint64_t derive_seed(uint64_t base, std::string_view purpose, uint64_t index) {
  return splitmix64(derive_seed(base, purpose) ^ splitmix64(index + 1));
}

uint64_t derive_seed(uint64_t base, std::string_view purpose, uint64_t index,
                     uint64_t subindex) {
  return splitmix64(derive_seed(base, purpose, index) ^
                    splitmix64(subindex + 1));
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform01();
  } while (u1 == 0.0);
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

}  // namespace dfsmc
