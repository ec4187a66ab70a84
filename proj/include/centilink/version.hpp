#pragma once

namespace centilink {

inline constexpr const char* kVersion = "1.0.0";

// Bumped whenever the on-disk layout of the TSV dictionaries or the binary
// cache changes incompatibly.
inline constexpr int kDictFormatVersion = 1;
inline constexpr unsigned char kCacheFormatVersion = 1;

}  // namespace centilink
