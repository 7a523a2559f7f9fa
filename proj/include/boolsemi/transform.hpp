#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boolsemi/element.hpp"
#include "boolsemi/grade.hpp"

namespace boolsemi {

/// The character values of an element. Character j sends group index s to
/// (-1)^popcount(j & s); j = 0 is the trivial character, so values[0] is
/// the grade. The map is a semiring homomorphism into Z per character.
struct Signature {
  std::vector<std::int64_t> values;  // size 2^l, character-index order

  unsigned rank() const noexcept;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// In-place Walsh-Hadamard butterfly over a power-of-two span. Unnormalized,
// so applying it twice multiplies by the length. Additions are
// overflow-checked (caller input is unconstrained on the inverse side).
void walsh_hadamard(std::span<std::int64_t> data);

/// All character values of u. Requires grade(u) <= INT64_MAX.
Signature transform(const Element& u);

enum class InverseFailure { kNotIntegral, kNegative };

/// Non-throwing inverse: the unique preimage when one exists in the
/// semiring, nullopt otherwise (reason in *why when given).
std::optional<Element> try_inverse_transform(const Signature& sig, InverseFailure* why = nullptr);

/// Throwing inverse: not_integral when some coefficient is not divisible by
/// 2^l, negative_coefficient when some coefficient is negative.
Element inverse_transform(const Signature& sig);

/// The set of values character j takes on the whole grade, sorted
/// ascending. Closed form: {n} for j = 0, else -n, -n+2, ..., n.
std::vector<std::int64_t> image_of_grade(GradeSpec spec, unsigned j);

/// Same set, by exhaustive enumeration of the grade.
std::vector<std::int64_t> image_of_grade_direct(GradeSpec spec, unsigned j,
                                                std::uint64_t element_budget = kDefaultEnumerationBudget);

/// Convolution through the character domain: transform both factors,
/// multiply pointwise, invert. Exact over the integers (the inverse divides
/// by 2^l and never rounds) and bit-identical to mul(); requires the grade
/// product to fit in int64.
Element mul_via_transform(const Element& u, const Element& v);

}  // namespace boolsemi
