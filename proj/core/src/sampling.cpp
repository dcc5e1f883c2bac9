#include "svdim/sampling.hpp"

#include <algorithm>
#include <limits>

namespace svdim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t tag : tags) h = splitmix64(h ^ splitmix64(tag + 0x632be59bd9b4e019ull));
  return h;
}

std::int64_t PointSampler::residue() {
  const std::uint64_t m = modulus_;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % m;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % m);
}

std::vector<std::int64_t> PointSampler::nonzero_vector(std::size_t length) {
  std::vector<std::int64_t> v(length);
  do {
    for (auto& c : v) c = residue();
  } while (std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; }));
  return v;
}

}  // namespace svdim
