#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolsemi/element.hpp"
#include "boolsemi/grade.hpp"

namespace boolsemi {

struct CensusConfig {
  // Predicted product count across divisor pairs; the census refuses to
  // start past this.
  std::uint64_t pair_budget = 1'000'000'000;
  // Bitmap cap for the rank-1 character-image path.
  std::uint64_t bitmap_bytes = 256ull << 20;
  // Worker cap for the divisor-pair loop; 0 means hardware concurrency.
  // Any schedule yields the identical result (set union commutes).
  unsigned threads = 1;
  // Count rank-1 censuses through character images instead of coefficient
  // vectors. Exact either way; this one reaches n ~ 10^6.
  bool signature_shortcut = true;
};

struct CensusResult {
  unsigned rank = 0;
  std::uint64_t grade = 0;
  std::uint64_t grade_size = 0;
  std::uint64_t theta = 0;        // composite elements in the grade
  std::uint64_t prime_count = 0;  // grade_size - theta
  unsigned omega = 0;             // prime factors of the grade, with multiplicity
  std::uint64_t p_minus = 0;      // smallest prime factor of the grade
  // theta / (n / ((log p)^delta (log log p)^1.5))^(2^l - 1) with
  // p = p_minus; present only when the grade is composite and p >= 16.
  std::optional<double> normalized;
};

/// The exact composite set of the grade, in canonical order: the union over
/// divisor pairs {d, n/d} with 1 < d <= sqrt(n) of all pairwise products,
/// deduplicated by coefficient vector. Requires n >= 2.
std::vector<Element> composites_of_grade(GradeSpec spec, const CensusConfig& config = {});

/// Independent route to the same set: certify every element of the grade
/// and keep the composite verdicts. Small instances only.
std::vector<Element> brute_force_composites(GradeSpec spec, std::uint64_t max_elements = 10'000);

/// Full census row for one grade. Requires n >= 2.
CensusResult census(GradeSpec spec, const CensusConfig& config = {});

// Rank-1 shortcut: the nontrivial character is one-to-one on a grade, so
// the composite set maps bijectively onto the distinct products of two
// symmetric progressions {-d..d step 2} * {-n/d..n/d step 2}, united over
// divisors. signature_composites returns those values sorted ascending;
// theta_via_signature just counts them.
std::vector<std::int64_t> signature_composites(std::uint64_t n,
                                               std::uint64_t bitmap_bytes = 256ull << 20);
std::uint64_t theta_via_signature(std::uint64_t n, std::uint64_t bitmap_bytes = 256ull << 20);

/// The normalized census ratio (see CensusResult::normalized). Throws
/// undefined_normalization for a prime grade or p_minus < 16.
double normalized_theta(GradeSpec spec, const CensusConfig& config = {});

}  // namespace boolsemi
