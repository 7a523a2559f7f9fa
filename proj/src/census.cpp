#include "boolsemi/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "boolsemi/errors.hpp"
#include "boolsemi/factorizer.hpp"
#include "boolsemi/ford.hpp"
#include "boolsemi/transform.hpp"

namespace boolsemi {

namespace {

std::vector<std::uint64_t> proper_divisors_up_to_sqrt(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Predicted product count, the budget currency for a census.
unsigned __int128 predicted_pairs(GradeSpec spec, const std::vector<std::uint64_t>& divisors) {
  unsigned __int128 total = 0;
  for (std::uint64_t d : divisors) {
    total += static_cast<unsigned __int128>(grade_size({spec.rank, d})) *
             grade_size({spec.rank, spec.grade / d});
  }
  return total;
}

void check_pair_budget(GradeSpec spec, const std::vector<std::uint64_t>& divisors,
                       const CensusConfig& config) {
  unsigned __int128 total = predicted_pairs(spec, divisors);
  if (total > config.pair_budget) {
    std::uint64_t clamped = total > std::numeric_limits<std::uint64_t>::max()
                                ? std::numeric_limits<std::uint64_t>::max()
                                : static_cast<std::uint64_t>(total);
    throw budget_exceeded("pair budget", clamped, config.pair_budget);
  }
}

// All products from one divisor pair {d, n/d}, inserted into `out`. For
// d * d == n the unordered-pair symmetry halves the work.
void collect_products(GradeSpec spec, std::uint64_t d, std::unordered_set<Element>& out) {
  const std::uint64_t n = spec.grade;
  std::vector<Element> left;
  left.reserve(grade_size({spec.rank, d}));
  for (const Element& u : enumerate_grade({spec.rank, d})) left.push_back(u);
  if (d * d == n) {
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = i; j < left.size(); ++j) out.insert(mul(left[i], left[j]));
  } else {
    for (const Element& v : enumerate_grade({spec.rank, n / d}))
      for (const Element& u : left) out.insert(mul(u, v));
  }
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Product bitmap for the rank-1 shortcut: bit v+n marks value v.
std::vector<std::uint64_t> signature_product_bitmap(std::uint64_t n, std::uint64_t bitmap_bytes) {
  if (n < 2) throw std::invalid_argument("census requires grade >= 2");
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / 2)
    throw std::overflow_error("grade too large for the signature shortcut");
  std::uint64_t bits = 2 * n + 1;
  if ((bits + 7) / 8 > bitmap_bytes)
    throw budget_exceeded("bitmap budget", (bits + 7) / 8, bitmap_bytes);
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  const std::int64_t sn = static_cast<std::int64_t>(n);
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t sd = static_cast<std::int64_t>(d);
    const std::int64_t sq = static_cast<std::int64_t>(n / d);
    for (std::int64_t p = -sd; p <= sd; p += 2) {
      for (std::int64_t q = -sq; q <= sq; q += 2) {
        std::uint64_t idx = static_cast<std::uint64_t>(p * q + sn);
        words[idx >> 6] |= std::uint64_t{1} << (idx & 63);
      }
    }
  }
  return words;
}

double normalization_denominator(GradeSpec spec, std::uint64_t p_minus) {
  double base = static_cast<double>(spec.grade) /
                (std::pow(std::log(static_cast<double>(p_minus)), delta()) *
                 std::pow(std::log(std::log(static_cast<double>(p_minus))), 1.5));
  return std::pow(base, static_cast<double>((std::uint64_t{1} << spec.rank) - 1));
}

}  // namespace

std::vector<Element> composites_of_grade(GradeSpec spec, const CensusConfig& config) {
  if (spec.rank < 1 || spec.rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (spec.grade < 2) throw std::invalid_argument("census requires grade >= 2");
  std::vector<std::uint64_t> divisors = proper_divisors_up_to_sqrt(spec.grade);
  check_pair_budget(spec, divisors, config);

  std::unordered_set<Element> merged;
  unsigned workers = std::min<std::size_t>(resolve_threads(config.threads), divisors.size());
  if (workers <= 1) {
    for (std::uint64_t d : divisors) collect_products(spec, d, merged);
  } else {
    // Round-robin the divisors over the workers; union is commutative and
    // associative, so any schedule produces the same set.
    std::vector<std::future<std::unordered_set<Element>>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        std::unordered_set<Element> local;
        for (std::size_t i = w; i < divisors.size(); i += workers)
          collect_products(spec, divisors[i], local);
        return local;
      }));
    }
    for (auto& f : futures) {
      std::unordered_set<Element> local = f.get();
      merged.merge(local);
    }
  }

  std::vector<Element> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Element> brute_force_composites(GradeSpec spec, std::uint64_t max_elements) {
  if (spec.grade < 2) throw std::invalid_argument("census requires grade >= 2");
  std::uint64_t size = grade_size(spec);
  if (size > max_elements) throw budget_exceeded("brute-force census budget", size, max_elements);
  std::vector<Element> out;
  for (const Element& e : enumerate_grade(spec, max_elements))
    if (certify(e).verdict == Verdict::kComposite) out.push_back(e);
  // enumerate_grade is canonical order already
  return out;
}

std::vector<std::int64_t> signature_composites(std::uint64_t n, std::uint64_t bitmap_bytes) {
  std::vector<std::uint64_t> words = signature_product_bitmap(n, bitmap_bytes);
  std::vector<std::int64_t> out;
  const std::int64_t sn = static_cast<std::int64_t>(n);
  for (std::uint64_t idx = 0; idx <= 2 * n; ++idx)
    if (words[idx >> 6] >> (idx & 63) & 1) out.push_back(static_cast<std::int64_t>(idx) - sn);
  return out;
}

std::uint64_t theta_via_signature(std::uint64_t n, std::uint64_t bitmap_bytes) {
  std::vector<std::uint64_t> words = signature_product_bitmap(n, bitmap_bytes);
  std::uint64_t count = 0;
  for (std::uint64_t w : words) count += static_cast<std::uint64_t>(std::popcount(w));
  return count;
}

CensusResult census(GradeSpec spec, const CensusConfig& config) {
  if (spec.rank < 1 || spec.rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (spec.grade < 2) throw std::invalid_argument("census requires grade >= 2");
  CensusResult r;
  r.rank = spec.rank;
  r.grade = spec.grade;
  r.grade_size = grade_size(spec);
  r.omega = prime_factor_count(spec.grade);
  r.p_minus = smallest_prime_factor(spec.grade);
  if (spec.rank == 1 && config.signature_shortcut) {
    std::vector<std::uint64_t> divisors = proper_divisors_up_to_sqrt(spec.grade);
    check_pair_budget(spec, divisors, config);
    r.theta = theta_via_signature(spec.grade, config.bitmap_bytes);
  } else {
    r.theta = composites_of_grade(spec, config).size();
  }
  r.prime_count = r.grade_size - r.theta;
  if (r.omega >= 2 && r.p_minus >= 16)
    r.normalized = static_cast<double>(r.theta) / normalization_denominator(spec, r.p_minus);
  return r;
}

double normalized_theta(GradeSpec spec, const CensusConfig& config) {
  if (spec.grade < 2 || prime_factor_count(spec.grade) < 2)
    throw undefined_normalization("normalized census ratio is undefined for a prime grade");
  std::uint64_t p = smallest_prime_factor(spec.grade);
  if (p < 16)
    throw undefined_normalization("normalized census ratio requires a smallest prime factor >= 16");
  CensusResult r = census(spec, config);
  return static_cast<double>(r.theta) / normalization_denominator(spec, p);
}

}  // namespace boolsemi
