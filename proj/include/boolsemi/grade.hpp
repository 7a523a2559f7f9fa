#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "boolsemi/element.hpp"

namespace boolsemi {

/// One grade slice N[(Z/2Z)^l]_n: all rank-l elements whose coefficients
/// sum to n.
struct GradeSpec {
  unsigned rank;
  std::uint64_t grade;

  friend bool operator==(const GradeSpec&, const GradeSpec&) = default;
};

/// Exact binomial coefficient in checked 64-bit arithmetic.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of elements in the grade: binomial(n + 2^l - 1, 2^l - 1), the
/// weak compositions of n into 2^l parts.
std::uint64_t grade_size(GradeSpec spec);

// Low-level weak-composition stepper in lexicographically decreasing order.
// fill_first_composition writes [total, 0, ..., 0]; next_composition
// advances in place and returns false once [0, ..., 0, total] was the
// current state.
void fill_first_composition(std::span<std::uint64_t> comp, std::uint64_t total);
bool next_composition(std::span<std::uint64_t> comp);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Single-pass range over every element of a grade, in canonical
/// (lexicographically decreasing) order. Independent ranges may run
/// concurrently.
class GradeRange {
 public:
  explicit GradeRange(GradeSpec spec, std::uint64_t element_budget = kDefaultEnumerationBudget);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    Element operator*() const { return Element(comp_); }
    iterator& operator++() {
      done_ = !next_composition(comp_);
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class GradeRange;
    iterator(unsigned parts, std::uint64_t total);

    std::vector<std::uint64_t> comp_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(parts_, total_); }
  std::default_sentinel_t end() const { return {}; }

  std::uint64_t size() const noexcept { return size_; }

 private:
  unsigned parts_;
  std::uint64_t total_;
  std::uint64_t size_;
};

/// Streams the grade; throws budget_exceeded when the grade has more than
/// element_budget members.
GradeRange enumerate_grade(GradeSpec spec, std::uint64_t element_budget = kDefaultEnumerationBudget);

}  // namespace boolsemi
