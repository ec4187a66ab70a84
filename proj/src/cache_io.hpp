#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "centilink/version.hpp"

// Binary cache primitives shared by the two dictionary caches. Layout: magic,
// version byte, kind byte ('M' mention dict, 'E' entity index), then a
// kind-specific payload, little-endian integers. Readers treat any mismatch
// or short read as "invalid cache"; callers then rebuild from TSV.
namespace centilink::cache {

inline constexpr char kMagic[4] = {'C', 'L', 'N', 'K'};
inline constexpr std::size_t kMaxString = 1 << 20;

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

inline void put_string(std::ostream& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return true;
}

inline bool get_u64(std::istream& in, std::uint64_t& v) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return true;
}

inline bool get_string(std::istream& in, std::string& s) {
  std::uint32_t len = 0;
  if (!get_u32(in, len) || len > kMaxString) return false;
  s.resize(len);
  return static_cast<bool>(in.read(s.data(), len));
}

inline void write_header(std::ostream& out, char kind) {
  out.write(kMagic, 4);
  out.put(static_cast<char>(kCacheFormatVersion));
  out.put(kind);
}

inline bool check_header(std::istream& in, char kind) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) return false;
  char version = 0;
  char got_kind = 0;
  if (!in.get(version) || static_cast<unsigned char>(version) != kCacheFormatVersion) return false;
  if (!in.get(got_kind) || got_kind != kind) return false;
  return true;
}

inline bool at_clean_eof(std::istream& in) {
  return in.peek() == std::char_traits<char>::eof();
}

}  // namespace centilink::cache
