#include "centilink/text.hpp"

namespace centilink {

namespace {

inline bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline char fold(unsigned char c) {
  // ASCII fold only; non-ASCII UTF-8 bytes pass through verbatim.
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + ('a' - 'A')) : static_cast<char>(c);
}

}  // namespace

std::string normalize_mention(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  bool pending_space = false;
  for (unsigned char c : surface) {
    if (is_ascii_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(fold(c));
  }
  return out;
}

}  // namespace centilink
