#include "boolsemi/element.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include "boolsemi/errors.hpp"

namespace boolsemi {

namespace {

unsigned rank_from_size(std::size_t size) {
  if (size < 2 || size > (std::size_t{1} << kMaxRank) || !std::has_single_bit(size))
    throw std::invalid_argument("coefficient count must be a power of two in [2, " +
                                std::to_string(std::size_t{1} << kMaxRank) + "], got " +
                                std::to_string(size));
  return static_cast<unsigned>(std::countr_zero(size));
}

void require_same_rank(const Element& u, const Element& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("element rank mismatch");
}

}  // namespace

Element::Element(std::vector<std::uint64_t> coeffs)
    : coeffs_(std::move(coeffs)), grade_(0), rank_(rank_from_size(coeffs_.size())) {
  for (std::uint64_t c : coeffs_) grade_ = checked_add(grade_, c);
}

Element Element::zero(unsigned rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  return Element(std::vector<std::uint64_t>(std::size_t{1} << rank, 0), 0, rank);
}

Element Element::unit(GroupIndex g) {
  GroupIndex checked = make_group_index(g.rank, g.bits);
  std::vector<std::uint64_t> coeffs(std::size_t{1} << checked.rank, 0);
  coeffs[checked.bits] = 1;
  return Element(std::move(coeffs), 1, checked.rank);
}

Element Element::identity(unsigned rank) { return unit(group_identity(rank)); }

Element add(const Element& u, const Element& v) {
  require_same_rank(u, v);
  std::uint64_t g = checked_add(u.grade_, v.grade_);
  // The grade sum bounds every coefficient sum, so the loop cannot wrap.
  std::vector<std::uint64_t> c(u.coeffs_);
  for (std::size_t s = 0; s < c.size(); ++s) c[s] += v.coeffs_[s];
  return Element(std::move(c), g, u.rank_);
}

Element mul(const Element& u, const Element& v) {
  require_same_rank(u, v);
  std::uint64_t g = checked_mul(u.grade_, v.grade_);
  // Every output coefficient is a sub-sum of grade(u)*grade(v), so once the
  // grade product is known to fit, the convolution itself cannot wrap.
  std::vector<std::uint64_t> c(u.coeffs_.size(), 0);
  for (std::size_t s = 0; s < c.size(); ++s) {
    std::uint64_t us = u.coeffs_[s];
    if (us == 0) continue;
    for (std::size_t t = 0; t < c.size(); ++t) c[s ^ t] += us * v.coeffs_[t];
  }
  return Element(std::move(c), g, u.rank_);
}

}  // namespace boolsemi
