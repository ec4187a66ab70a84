#pragma once

#include <string>
#include <string_view>

namespace centilink {

// Canonical form of a mention surface: ASCII case-folded, leading/trailing
// whitespace removed, internal whitespace runs collapsed to a single space.
// Entity identifiers are never normalized; they keep case and underscores.
std::string normalize_mention(std::string_view surface);

}  // namespace centilink
