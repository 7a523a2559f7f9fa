#pragma once

#include <cstdint>
#include <string>

namespace boolsemi {

struct SelftestReport {
  std::uint64_t cases = 0;  // random cases exercised in total
  bool ok = true;
  std::string failure;  // first violated law, empty when ok
};

/// Seeded random sweep of the algebra laws on ranks 1..max_rank: semiring
/// axioms, grade additivity and multiplicativity, unit-group structure, and
/// the character transform's homomorphism and round-trip properties.
SelftestReport run_selftest(std::uint64_t seed, std::uint64_t cases_per_rank,
                            unsigned max_rank = 4);

}  // namespace boolsemi
