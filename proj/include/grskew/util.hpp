#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "grskew/errors.hpp"

namespace grskew {

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

/// Largest power of two dividing n (the 2-primary part of a characteristic).
inline long long two_part(long long n) {
  long long p = 1;
  while (n % 2 == 0 && n > 0) {
    n /= 2;
    p *= 2;
  }
  return p;
}

/// Cooperative wall-clock budget for the long enumeration loops.  Disabled by
/// default; check() is a no-op then.
class Deadline {
public:
  Deadline() = default;

  static Deadline after(std::chrono::milliseconds ms) {
    Deadline d;
    d.enabled_ = true;
    d.end_ = std::chrono::steady_clock::now() + ms;
    return d;
  }

  static const Deadline& none() {
    static const Deadline d;
    return d;
  }

  bool enabled() const { return enabled_; }

  bool expired() const {
    return enabled_ && std::chrono::steady_clock::now() >= end_;
  }

  void check() const {
    if (expired()) fail(errc::timed_out, "instance evaluation exceeded its time budget");
  }

private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point end_{};
};

}  // namespace grskew
