#include "boolsemi/transform.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "boolsemi/errors.hpp"

namespace boolsemi {

namespace {

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("signature addition overflow");
  return r;
}

std::int64_t checked_sub_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("signature subtraction overflow");
  return r;
}

unsigned signature_rank(const Signature& sig) {
  std::size_t size = sig.values.size();
  if (size < 2 || size > (std::size_t{1} << kMaxRank) || !std::has_single_bit(size))
    throw std::invalid_argument("signature length must be a power of two in [2, " +
                                std::to_string(std::size_t{1} << kMaxRank) + "]");
  return static_cast<unsigned>(std::countr_zero(size));
}

}  // namespace

unsigned Signature::rank() const noexcept {
  return static_cast<unsigned>(std::countr_zero(values.size()));
}

void walsh_hadamard(std::span<std::int64_t> data) {
  assert(std::has_single_bit(data.size()));
  for (std::size_t h = 1; h < data.size(); h <<= 1) {
    for (std::size_t i = 0; i < data.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        std::int64_t x = data[j];
        std::int64_t y = data[j + h];
        data[j] = checked_add_i64(x, y);
        data[j + h] = checked_sub_i64(x, y);
      }
    }
  }
}

Signature transform(const Element& u) {
  if (u.grade() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("grade too large for a signed signature");
  Signature sig;
  sig.values.assign(u.coeffs().begin(), u.coeffs().end());
  // Every intermediate is a signed sub-sum of the coefficients, so its
  // magnitude never exceeds the grade.
  walsh_hadamard(sig.values);
  return sig;
}

std::optional<Element> try_inverse_transform(const Signature& sig, InverseFailure* why) {
  unsigned rank = signature_rank(sig);
  std::vector<std::int64_t> t(sig.values);
  walsh_hadamard(t);  // self-inverse up to the factor 2^l
  const std::int64_t order = std::int64_t{1} << rank;
  std::vector<std::uint64_t> coeffs(t.size());
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t[s] % order != 0) {
      if (why) *why = InverseFailure::kNotIntegral;
      return std::nullopt;
    }
    std::int64_t q = t[s] / order;
    if (q < 0) {
      if (why) *why = InverseFailure::kNegative;
      return std::nullopt;
    }
    coeffs[s] = static_cast<std::uint64_t>(q);
  }
  return Element(std::move(coeffs));
}

Element inverse_transform(const Signature& sig) {
  InverseFailure why;
  if (auto u = try_inverse_transform(sig, &why)) return std::move(*u);
  if (why == InverseFailure::kNotIntegral)
    throw not_integral("signature has no preimage: a coefficient is not divisible by the group order");
  throw negative_coefficient("signature has no preimage: a coefficient is negative");
}

std::vector<std::int64_t> image_of_grade(GradeSpec spec, unsigned j) {
  if (spec.rank < 1 || spec.rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (j >= (1u << spec.rank)) throw std::invalid_argument("character index out of range");
  if (spec.grade > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("grade too large for a signed signature");
  const std::int64_t n = static_cast<std::int64_t>(spec.grade);
  if (j == 0) return {n};
  std::vector<std::int64_t> image;
  image.reserve(static_cast<std::size_t>(spec.grade) + 1);
  for (std::int64_t v = -n; v <= n; v += 2) image.push_back(v);
  return image;
}

std::vector<std::int64_t> image_of_grade_direct(GradeSpec spec, unsigned j,
                                                std::uint64_t element_budget) {
  if (spec.rank < 1 || spec.rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (j >= (1u << spec.rank)) throw std::invalid_argument("character index out of range");
  std::uint64_t size = grade_size(spec);
  if (size > element_budget) throw budget_exceeded("enumeration budget", size, element_budget);

  const std::size_t parts = std::size_t{1} << spec.rank;
  std::vector<std::int64_t> sign(parts);
  for (std::size_t s = 0; s < parts; ++s)
    sign[s] = (std::popcount(j & static_cast<unsigned>(s)) & 1) ? -1 : 1;

  std::vector<std::uint64_t> comp(parts);
  fill_first_composition(comp, spec.grade);
  std::unordered_set<std::int64_t> seen;
  do {
    std::int64_t v = 0;
    for (std::size_t s = 0; s < parts; ++s) v += sign[s] * static_cast<std::int64_t>(comp[s]);
    seen.insert(v);
  } while (next_composition(comp));

  std::vector<std::int64_t> image(seen.begin(), seen.end());
  std::sort(image.begin(), image.end());
  return image;
}

Element mul_via_transform(const Element& u, const Element& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("element rank mismatch");
  Signature su = transform(u);
  Signature sv = transform(v);
  // |su[j] * sv[j]| <= grade(u) * grade(v), checked here once.
  if (u.grade() != 0 && checked_mul(u.grade(), v.grade()) >
                            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("grade product too large for the transform path");
  Signature prod;
  prod.values.resize(su.values.size());
  for (std::size_t j = 0; j < prod.values.size(); ++j)
    prod.values[j] = su.values[j] * sv.values[j];
  auto result = try_inverse_transform(prod);
  assert(result.has_value());  // a convolution of naturals always inverts
  return std::move(*result);
}

}  // namespace boolsemi
