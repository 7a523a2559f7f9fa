#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boolsemi {

// A work or memory cap was hit before the computation could finish. This is
// an inconclusive outcome, distinct from any mathematical answer; budget()
// names the cap so callers can report exactly which one ran out.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(std::string budget, std::uint64_t needed, std::uint64_t cap)
      : std::runtime_error(budget + " exceeded: needed " + std::to_string(needed) +
                           ", cap " + std::to_string(cap)),
        budget_(std::move(budget)) {}

  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

// Inverse character transform: some coefficient is not divisible by the
// group order, so no element (over any coefficient ring) has this signature.
class not_integral : public std::domain_error {
  using std::domain_error::domain_error;
};

// Inverse character transform: the coefficients are integral but one is
// negative, so the signature is realized only outside the semiring.
class negative_coefficient : public std::domain_error {
  using std::domain_error::domain_error;
};

// The census normalization is undefined: the grade is prime, or its smallest
// prime factor is below 16 (log log would be nonpositive).
class undefined_normalization : public std::domain_error {
  using std::domain_error::domain_error;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit addition overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit multiplication overflow");
  return r;
}

}  // namespace boolsemi
