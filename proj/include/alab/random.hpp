#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace alab {

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Counter-based value: a pure function of (key, counter).
constexpr std::uint64_t keyed_value(std::uint64_t key, std::uint64_t counter) noexcept {
  return splitmix64(key ^ splitmix64(counter + 0x632BE59BD9B4E019ull));
}

constexpr double to_unit(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// A single-consumer stream of 64-bit values. Every value is a pure function
/// of the stream key and a position counter, so streams can be replayed,
/// skipped ahead, or queried at arbitrary positions.
class RandomStream {
 public:
  RandomStream() = default;
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t position() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept { return detail::keyed_value(key_, counter_++); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return detail::to_unit(next_u64()); }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RandomStream::below: bound must be positive");
    // Lemire's multiply-shift with rejection; platform independent.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Random access without advancing the stream.
  std::uint64_t at(std::uint64_t counter) const noexcept {
    return detail::keyed_value(key_, counter);
  }
  double uniform_at(std::uint64_t counter) const noexcept { return detail::to_unit(at(counter)); }

  /// Child stream, independent for statistical purposes.
  RandomStream split(std::uint64_t index) const noexcept {
    return RandomStream(detail::splitmix64(key_ ^ detail::splitmix64(~index)));
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

/// Master seed plus derivation of (purpose tag, index) substreams.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  RandomStream stream(std::string_view tag, std::uint64_t index = 0) const noexcept {
    const std::uint64_t t = detail::splitmix64(seed_ ^ detail::fnv1a(tag));
    return RandomStream(detail::splitmix64(t + detail::splitmix64(index)));
  }

 private:
  std::uint64_t seed_;
};

}  // namespace alab
