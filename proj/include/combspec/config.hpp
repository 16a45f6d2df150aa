#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace combspec {

/// Resource ceilings shared by every enumeration. Exceeding one is an error,
/// never a silent truncation.
struct Limits {
  int max_n = 7;
  std::uint64_t max_family = 10'000'000;
  std::uint64_t max_steps = 1'000'000'000;
  /// 0 selects the machine's hardware concurrency.
  unsigned workers = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_order(int n, const char* what) const;
  void check_family(std::uint64_t count, const char* what) const;
  void check_steps(std::uint64_t steps, const char* what) const;
  void check_deadline() const;
};

/// Saturating helpers for guard arithmetic.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t factorial(int n);

}  // namespace combspec
