#include "s2rg/rng.hpp"

#include <cmath>
#include <numbers>

namespace s2rg {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::uint64_t seed, std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ mix64(seed);
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

RngStream RngStream::derive(std::uint64_t root_seed,
                            std::string_view stream_id) {
  return RngStream(mix64(fnv1a(root_seed, stream_id)));
}

RngStream RngStream::child(std::string_view label) const {
  return RngStream(mix64(fnv1a(key_, label)));
}

std::uint64_t RngStream::u64() {
  return mix64(key_ + (++counter_) * kGolden);
}

double RngStream::uniform01() {
  // 53 random mantissa bits; result in [0, 1).
  return static_cast<double>(u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double RngStream::uniform_angle() {
  // Uniform on (-pi, pi]: negate a draw from [-pi, pi).
  return -uniform(-std::numbers::pi, std::numbers::pi);
}

double RngStream::normal(double mean, double stddev) {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return mean + stddev * cached_normal_;
  }
  // Box-Muller; u1 shifted away from zero.
  double u1 = uniform01();
  double u2 = uniform01();
  double radius = std::sqrt(-2.0 * std::log1p(-u1));
  double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return mean + stddev * radius * std::cos(angle);
}

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
  // Rejection-free modulo is biased for huge n; all uses here have n far
  // below 2^32 where the bias is negligible, but reject anyway.
  std::uint64_t threshold = (~n + 1) % n;  // (2^64 - n) mod n
  for (;;) {
    std::uint64_t v = u64();
    if (v >= threshold) return v % n;
  }
}

bool RngStream::bernoulli(double p) { return uniform01() < p; }

}  // namespace s2rg
