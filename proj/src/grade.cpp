#include "boolsemi/grade.hpp"

#include <limits>
#include <stdexcept>

#include "boolsemi/errors.hpp"

namespace boolsemi {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; every prefix is itself a binomial coefficient, so
  // each intermediate division is exact and the prefixes grow monotonically
  // toward the result for k <= n/2.
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t grade_size(GradeSpec spec) {
  if (spec.rank < 1 || spec.rank > kMaxRank) throw std::invalid_argument("rank out of range");
  std::uint64_t parts = std::uint64_t{1} << spec.rank;
  return binomial(checked_add(spec.grade, parts - 1), parts - 1);
}

void fill_first_composition(std::span<std::uint64_t> comp, std::uint64_t total) {
  for (auto& c : comp) c = 0;
  comp[0] = total;
}

bool next_composition(std::span<std::uint64_t> comp) {
  const std::size_t k = comp.size();
  if (k < 2) return false;
  // Rightmost slot before the last that still has mass; everything between
  // it and the last slot is zero by construction.
  std::size_t i = k - 1;
  while (i-- > 0) {
    if (comp[i] > 0) {
      std::uint64_t moved = comp[k - 1] + 1;
      comp[k - 1] = 0;
      comp[i] -= 1;
      comp[i + 1] = moved;
      return true;
    }
  }
  return false;
}

GradeRange::iterator::iterator(unsigned parts, std::uint64_t total) : comp_(parts, 0) {
  fill_first_composition(comp_, total);
}

GradeRange::GradeRange(GradeSpec spec, std::uint64_t element_budget)
    : parts_(1u << spec.rank), total_(spec.grade), size_(grade_size(spec)) {
  if (size_ > element_budget)
    throw budget_exceeded("enumeration budget", size_, element_budget);
}

GradeRange enumerate_grade(GradeSpec spec, std::uint64_t element_budget) {
  return GradeRange(spec, element_budget);
}

}  // namespace boolsemi
