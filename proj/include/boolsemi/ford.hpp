#pragma once

#include <cstdint>

namespace boolsemi {

/// The multiplication-table density exponent 1 - (1 + log log 2) / log 2,
/// about 0.0861.
double delta();

struct FordConfig {
  // Distinct-value bitmap cap. Product sets whose largest value does not
  // fit under it are counted with a hash set instead (where permitted).
  std::uint64_t bitmap_bytes = 256ull << 20;
};

enum class CountStrategy { kAuto, kBitmap, kHashSet };

/// Exact number of distinct products j1 * j2 with 1 <= j1 <= m and
/// 1 <= j2 <= n, via a bitmap over [1, m*n]. Symmetric in m and n.
std::uint64_t multiplication_table_size(std::uint64_t m, std::uint64_t n,
                                        const FordConfig& config = {});

/// The arithmetic progression {offset + j*step : 1 <= j <= count}. All
/// terms are positive; the largest must fit in 64 bits.
struct ProgressionSpec {
  std::uint64_t offset = 0;
  std::uint64_t step = 1;
  std::uint64_t count = 0;
};

/// Exact number of distinct pairwise products of two progressions. kAuto
/// picks the bitmap when the largest product fits under the bitmap cap and
/// hashing otherwise; the two strategies agree exactly.
std::uint64_t progression_product_size(const ProgressionSpec& p, const ProgressionSpec& q,
                                       CountStrategy strategy = CountStrategy::kAuto,
                                       const FordConfig& config = {});

struct DensityRecord {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t cardinality = 0;
  double normalized = 0.0;  // cardinality * (log m)^delta * (log log m)^1.5 / (m*n)
};

/// Table cardinality plus its normalized density. Requires 16 <= m <= n;
/// the smaller range drives the normalization, and swapping is the
/// caller's job.
DensityRecord normalized_density(std::uint64_t m, std::uint64_t n, const FordConfig& config = {});

}  // namespace boolsemi
