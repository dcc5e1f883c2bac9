#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace svdim {

/// Mixes a base seed with a sequence of tags (splitmix64 chain). Used to give
/// every trial and grid cell its own independent, reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

/// Uniform residues in [0, modulus). Reduction is done by rejection on the raw
/// 64-bit engine output so draws are identical across standard libraries.
class PointSampler {
 public:
  PointSampler(std::uint64_t seed, std::uint32_t modulus) : engine_(seed), modulus_(modulus) {}

  std::int64_t residue();
  /// Uniform vector of the given length, rejecting the zero vector.
  std::vector<std::int64_t> nonzero_vector(std::size_t length);

  std::uint32_t modulus() const { return modulus_; }

 private:
  std::mt19937_64 engine_;
  std::uint32_t modulus_;
};

}  // namespace svdim
