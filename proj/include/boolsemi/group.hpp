#pragma once

#include <cstdint>

namespace boolsemi {

// Rank cap: coefficient vectors stay dense and at most 64 wide.
inline constexpr unsigned kMaxRank = 6;

/// An element of (Z/2Z)^l, encoded as an l-bit index. The group law is
/// bitwise XOR, index 0 is the identity, and every element is its own
/// inverse.
struct GroupIndex {
  unsigned rank;       // l, in [1, kMaxRank]
  std::uint32_t bits;  // in [0, 2^l)

  friend bool operator==(const GroupIndex&, const GroupIndex&) = default;
};

// Validating constructor for the index type.
GroupIndex make_group_index(unsigned rank, std::uint32_t bits);

// Group product; both operands must live in the same group.
GroupIndex group_mul(GroupIndex s, GroupIndex t);

inline GroupIndex group_identity(unsigned rank) { return GroupIndex{rank, 0}; }

}  // namespace boolsemi
