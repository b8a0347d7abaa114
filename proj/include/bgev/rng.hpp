#pragma once

#include <cstdint>

namespace bgev {

// Counter-based uniform generator. Each (key, counter) pair maps to one
// double in (0,1); streams for replicates are derived by hashing the
// replicate index into the key, so parallel replication stays reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  // Stateless access: i-th variate of this stream.
  double uniform_at(std::uint64_t i) const { return to_unit(mix(key_ + i * kGamma)); }

  // Stateful convenience; advances an internal counter.
  double next() { return uniform_at(counter_++); }

  CounterRng substream(std::uint64_t index) const {
    return CounterRng(mix(key_ ^ mix(index + 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t key() const { return key_; }

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  // 53-bit mantissa, shifted into (0,1); never returns 0 or 1 exactly.
  static double to_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Deterministic seed derivation for simulation grids:
// hash-combines (master_seed, study tag, cell id, replicate index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t study,
                                 std::uint64_t cell, std::uint64_t replicate) {
  std::uint64_t h = CounterRng::mix(master);
  h = CounterRng::mix(h ^ (study + 0x9e3779b97f4a7c15ull));
  h = CounterRng::mix(h ^ (cell + 0xc2b2ae3d27d4eb4full));
  h = CounterRng::mix(h ^ (replicate + 0x165667b19e3779f9ull));
  return h;
}

}  // namespace bgev
