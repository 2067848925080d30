#ifndef ROOTFOLD_TEST_UTIL_HPP
#define ROOTFOLD_TEST_UTIL_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

// Fixed seeds by default; override with ROOTFOLD_TEST_SEED for exploration.
inline std::uint64_t test_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("ROOTFOLD_TEST_SEED")) return std::stoull(env);
  return fallback;
}

#endif
