// Seed-deterministic random variable-regular Tanner graphs with a girth
// floor; used by the verification command and the oracle cross-checks.
#pragma once

#include <cstdint>

#include "trapscan/tanner.hpp"

namespace trapscan {

// n*d_v must be divisible by d_c. The result has every variable degree d_v,
// check degrees <= d_c, and girth >= min_girth. Throws after too many
// restarts (parameters too tight).
TannerGraph random_regular_tanner(int n, int d_v, int d_c, int min_girth, uint64_t seed);

}  // namespace trapscan
