#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "boolsemi/group.hpp"

namespace boolsemi {

/// An element of the graded semiring N[(Z/2Z)^l]: a dense vector of 2^l
/// natural-number coefficients, indexed by group element. Values are
/// immutable after construction and safe to share across threads.
///
/// The grade (coefficient sum) is computed once, in checked 64-bit
/// arithmetic; construction fails rather than wrap around.
class Element {
 public:
  /// Rank is inferred from the coefficient count, which must be a power of
  /// two in [2, 2^kMaxRank].
  explicit Element(std::vector<std::uint64_t> coeffs);

  static Element zero(unsigned rank);
  static Element unit(GroupIndex g);       // the group element itself, coefficient 1
  static Element identity(unsigned rank);  // unit at index 0

  unsigned rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return coeffs_.size(); }  // |G| = 2^l

  std::uint64_t operator[](std::size_t s) const noexcept { return coeffs_[s]; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

  std::uint64_t grade() const noexcept { return grade_; }
  bool is_zero() const noexcept { return grade_ == 0; }
  bool is_unit() const noexcept { return grade_ == 1; }

  friend bool operator==(const Element& a, const Element& b) { return a.coeffs_ == b.coeffs_; }
  // Canonical order: lexicographic on the coefficient vector.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  Element(std::vector<std::uint64_t> coeffs, std::uint64_t grade, unsigned rank) noexcept
      : coeffs_(std::move(coeffs)), grade_(grade), rank_(rank) {}

  friend Element add(const Element&, const Element&);
  friend Element mul(const Element&, const Element&);

  std::vector<std::uint64_t> coeffs_;
  std::uint64_t grade_;
  unsigned rank_;
};

/// Coefficient-wise sum. Grades add; overflow is an error.
Element add(const Element& u, const Element& v);

/// Convolution product over the group: c[s] = sum_t u[t] * v[t ^ s].
/// Grades multiply; the grade product is overflow-checked up front, which
/// bounds every coefficient of the result.
Element mul(const Element& u, const Element& v);

inline Element operator+(const Element& u, const Element& v) { return add(u, v); }
inline Element operator*(const Element& u, const Element& v) { return mul(u, v); }

}  // namespace boolsemi

template <>
struct std::hash<boolsemi::Element> {
  std::size_t operator()(const boolsemi::Element& e) const noexcept {
    // FNV-1a over the coefficient words
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t c : e.coeffs()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
