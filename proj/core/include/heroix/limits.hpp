#pragma once

#include <cstdint>

namespace heroix {

/// Largest n accepted by enumerate_tournaments(). Defaults to 8 and may be
/// overridden with the HEROIX_MAX_N environment variable.
int enumeration_limit();

inline constexpr int kCanonicalLimit = 16;
inline constexpr int kSubsetDpLimit = 24;
inline constexpr int kForestSearchLimit = 9;
inline constexpr int kJewelLimit = 16;
inline constexpr int kMaskEngineLimit = 64;
inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

}  // namespace heroix
