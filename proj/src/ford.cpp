#include "boolsemi/ford.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "boolsemi/errors.hpp"

namespace boolsemi {

namespace {

std::vector<std::uint64_t> bitmap_words(std::uint64_t bits, std::uint64_t bitmap_bytes) {
  if ((bits + 7) / 8 > bitmap_bytes)
    throw budget_exceeded("bitmap budget", (bits + 7) / 8, bitmap_bytes);
  return std::vector<std::uint64_t>((bits + 63) / 64, 0);
}

std::uint64_t popcount_words(const std::vector<std::uint64_t>& words) {
  std::uint64_t count = 0;
  for (std::uint64_t w : words) count += static_cast<std::uint64_t>(std::popcount(w));
  return count;
}

std::uint64_t largest_term(const ProgressionSpec& p) {
  return checked_add(p.offset, checked_mul(p.step, p.count));
}

}  // namespace

double delta() { return 1.0 - (1.0 + std::log(std::log(2.0))) / std::log(2.0); }

std::uint64_t multiplication_table_size(std::uint64_t m, std::uint64_t n,
                                        const FordConfig& config) {
  if (m < 1 || n < 1) throw std::invalid_argument("table ranges must be >= 1");
  if (m > n) std::swap(m, n);  // the product set is symmetric in the two ranges
  std::vector<std::uint64_t> words = bitmap_words(checked_add(checked_mul(m, n), 1),
                                                  config.bitmap_bytes);
  // For j1 <= m <= n every unordered index pair is visited once with
  // j2 >= j1, which covers the whole table.
  for (std::uint64_t j1 = 1; j1 <= m; ++j1) {
    for (std::uint64_t j2 = j1; j2 <= n; ++j2) {
      std::uint64_t v = j1 * j2;
      words[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
  return popcount_words(words);
}

std::uint64_t progression_product_size(const ProgressionSpec& p, const ProgressionSpec& q,
                                       CountStrategy strategy, const FordConfig& config) {
  if (p.step < 1 || q.step < 1) throw std::invalid_argument("progression step must be >= 1");
  if (p.count == 0 || q.count == 0) return 0;
  std::uint64_t max_product = checked_mul(largest_term(p), largest_term(q));

  if (strategy == CountStrategy::kAuto) {
    strategy = (max_product / 8 < config.bitmap_bytes) ? CountStrategy::kBitmap
                                                       : CountStrategy::kHashSet;
  }

  if (strategy == CountStrategy::kBitmap) {
    std::vector<std::uint64_t> words = bitmap_words(max_product + 1, config.bitmap_bytes);
    for (std::uint64_t i = 1; i <= p.count; ++i) {
      std::uint64_t a = p.offset + i * p.step;
      for (std::uint64_t j = 1; j <= q.count; ++j) {
        std::uint64_t v = a * (q.offset + j * q.step);
        words[v >> 6] |= std::uint64_t{1} << (v & 63);
      }
    }
    return popcount_words(words);
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(p.count * q.count, 1u << 22)));
  for (std::uint64_t i = 1; i <= p.count; ++i) {
    std::uint64_t a = p.offset + i * p.step;
    for (std::uint64_t j = 1; j <= q.count; ++j) seen.insert(a * (q.offset + j * q.step));
  }
  return seen.size();
}

DensityRecord normalized_density(std::uint64_t m, std::uint64_t n, const FordConfig& config) {
  if (m > n) throw std::domain_error("normalized_density requires m <= n (swap the arguments)");
  if (m < 16) throw std::domain_error("normalized_density requires m >= 16");
  DensityRecord r;
  r.m = m;
  r.n = n;
  r.cardinality = multiplication_table_size(m, n, config);
  double lm = std::log(static_cast<double>(m));
  r.normalized = static_cast<double>(r.cardinality) * std::pow(lm, delta()) *
                 std::pow(std::log(lm), 1.5) /
                 (static_cast<double>(m) * static_cast<double>(n));
  return r;
}

}  // namespace boolsemi
