#pragma once

#include <random>

namespace platekit {

/// Uniform double in [0, 1) from the top 53 bits of the engine output, so
/// sequences do not depend on the standard library's distributions.
double uniform01(std::mt19937_64& rng);

/// Standard normal deviate (Box-Muller, one value per call).
double standard_normal(std::mt19937_64& rng);

}  // namespace platekit
