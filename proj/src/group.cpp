#include "boolsemi/group.hpp"

#include <stdexcept>
#include <string>

namespace boolsemi {

GroupIndex make_group_index(unsigned rank, std::uint32_t bits) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("group rank must be in [1, " + std::to_string(kMaxRank) + "]");
  if (bits >= (1u << rank))
    throw std::invalid_argument("group index " + std::to_string(bits) +
                                " out of range for rank " + std::to_string(rank));
  return GroupIndex{rank, bits};
}

GroupIndex group_mul(GroupIndex s, GroupIndex t) {
  if (s.rank != t.rank) throw std::invalid_argument("group rank mismatch");
  return GroupIndex{s.rank, s.bits ^ t.bits};
}

}  // namespace boolsemi
