#pragma once

#include <cstdint>

namespace gdual {

// Shared knobs for the positivity search, samplers, and CLI. A fixed seed
// makes every run byte-reproducible.
struct RunConfig {
  double tol = 1e-9;             // PSD threshold scale, multiplied by dimension
  double certificate_eps = 1e-6;  // refutations must reach at least this depth
  int restarts = 32;
  int max_iters = 500;
  int samples = 1000;  // target sample count per inequality family
  std::uint64_t seed = 1;

  enum class Format { json, text };
  Format format = Format::json;
};

// Deterministic stream splitting (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace gdual
