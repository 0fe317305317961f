#pragma once

namespace ccent {

inline constexpr const char* kVersion = "0.1.0";

// Identifies the seed -> stream derivation scheme. Bump whenever the mapping
// from (seed, stream name) to random draws changes, so result files remain
// attributable to the scheme that produced them.
inline constexpr const char* kRngLayout = "ccent-rng-v1";

}  // namespace ccent
