#include "combspec/config.hpp"

#include <limits>
#include <string>
#include <thread>

#include "combspec/error.hpp"
#include "combspec/parallel.hpp"

namespace combspec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::size_guard: return "size_guard";
    case ErrorCode::not_divisible: return "not_divisible";
    case ErrorCode::timeout: return "timeout";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

void Limits::check_order(int n, const char* what) const {
  if (n > max_n) {
    throw Error(ErrorCode::size_guard, std::string(what) + ": order " + std::to_string(n) +
                                           " exceeds max_n=" + std::to_string(max_n));
  }
}

void Limits::check_family(std::uint64_t count, const char* what) const {
  if (count > max_family) {
    throw Error(ErrorCode::size_guard, std::string(what) + ": family of " +
                                           std::to_string(count) + " members exceeds max_family=" +
                                           std::to_string(max_family));
  }
}

void Limits::check_steps(std::uint64_t steps, const char* what) const {
  if (steps > max_steps) {
    throw Error(ErrorCode::size_guard, std::string(what) + ": " + std::to_string(steps) +
                                           " enumeration steps exceed max_steps=" +
                                           std::to_string(max_steps));
  }
}

void Limits::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw Error(ErrorCode::timeout, "time limit exceeded");
  }
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > max / a) return max;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = saturating_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

}  // namespace combspec
