#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace s2rg {

// Label for a derived random stream. Identical (root_seed, stream_id)
// pairs always produce identical sequences; distinct stream ids give
// statistically independent streams.
struct SeedStream {
  std::uint64_t root_seed = 0;
  std::string stream_id;
};

// Counter-based generator (splitmix64 over key + counter). Every random
// draw in the project goes through this class so that results do not
// depend on standard-library distribution internals or execution order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  static RngStream derive(std::uint64_t root_seed, std::string_view stream_id);

  // Derive an independent stream from this one without advancing it.
  RngStream child(std::string_view label) const;

  std::uint64_t u64();

  // Uniform on [0, 1).
  double uniform01();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);
  // Uniform on (-pi, pi].
  double uniform_angle();
  // Standard Box-Muller normal.
  double normal(double mean = 0.0, double stddev = 1.0);
  // Uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_int(std::uint64_t n);
  bool bernoulli(double p);

  std::uint64_t key() const { return key_; }

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return u64(); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

inline RngStream derive_rng(const SeedStream& stream) {
  return RngStream::derive(stream.root_seed, stream.stream_id);
}

}  // namespace s2rg
