#ifndef NILFORGE_CORE_HPP
#define NILFORGE_CORE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nilforge {

using Id = int32_t;
constexpr Id kNone = -1;

// Side of a tile, in the tile's own frame.
enum class SideLabel : uint8_t { U = 0, R = 1, D = 2, L = 3 };

// Corner of a tile, in the tile's own frame.
enum class CornerCode : uint8_t { UL = 0, UR = 1, DR = 2, DL = 3 };

// The three interior vertices created by one subdivision.
enum class InnerCode : uint8_t { A = 0, B = 1, C = 2 };

// What a vertex is, within one planar region.
enum class VKind : uint8_t { Corner = 0, Boundary = 1, Side = 2, Inner = 3 };

inline char side_char(SideLabel s) {
  return "URDL"[static_cast<int>(s)];
}
inline const char* corner_str(CornerCode c) {
  static const char* k[] = {"UL", "UR", "DR", "DL"};
  return k[static_cast<int>(c)];
}
inline char inner_char(InnerCode c) {
  return "ABC"[static_cast<int>(c)];
}

// Carrier provenance. I1..I8 are the eight interior segments of one
// subdivision; B* are the four sides of the level-1 square; PD/PR are the
// bottom and right sides of a pasted macrotile.
enum class CarrierKind : uint8_t {
  I1 = 1, I2, I3, I4, I5, I6, I7, I8,
  BU, BR, BD, BL,
  PD, PR,
};

inline bool carrier_is_internal(CarrierKind k) {
  return static_cast<uint8_t>(k) >= 1 && static_cast<uint8_t>(k) <= 8;
}

inline std::string carrier_kind_str(CarrierKind k) {
  switch (k) {
    case CarrierKind::BU: return "bU";
    case CarrierKind::BR: return "bR";
    case CarrierKind::BD: return "bD";
    case CarrierKind::BL: return "bL";
    case CarrierKind::PD: return "pD";
    case CarrierKind::PR: return "pR";
    default: return "i" + std::to_string(static_cast<int>(k));
  }
}

// FNV-1a, used for stable structural codes (environment digests).
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}
inline uint64_t fnv1a(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a(s.data(), s.size(), h);
}
inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  uint64_t buf[2] = {a, b};
  return fnv1a(buf, sizeof buf);
}
inline uint64_t hash_u64s(const std::vector<uint64_t>& v) {
  return fnv1a(v.data(), v.size() * sizeof(uint64_t));
}

}  // namespace nilforge

#endif
