#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "boolsemi/element.hpp"

namespace boolsemi {

/// Least prime dividing n, by trial division. Requires n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

/// Number of prime factors of n counted with multiplicity (0 for n = 1).
unsigned prime_factor_count(std::uint64_t n);

struct FactorizerConfig {
  // Cap on the exhaustive quotient search used when a character of the
  // divisor candidate vanishes. Exceeding it raises budget_exceeded --
  // an explicit inconclusive outcome, never a silent verdict.
  std::uint64_t fallback_budget = 10'000'000;
  // Cap on total divisor candidates scanned by certify().
  std::uint64_t scan_budget = 10'000'000;
};

/// Exact deconvolution: some v with mul(u, v) == w, or nullopt when none
/// exists. When every character of u is nonzero the quotient is unique and
/// found by pointwise signature division plus integrality/nonnegativity
/// checks. When a character of u vanishes, the matching character of w must
/// vanish too (else no quotient), and the residual ambiguity is settled by
/// scanning the quotient grade in canonical order, within fallback_budget.
///
/// Quotients need not be unique; the first one in canonical order wins.
std::optional<Element> divide(const Element& w, const Element& u,
                              const FactorizerConfig& config = {});

enum class Verdict { kZero, kUnit, kPrime, kComposite };

const char* to_string(Verdict v);

struct Certificate {
  Verdict verdict;
  // Present iff composite: a factor pair multiplying back to the input,
  // neither factor a unit, with grades d <= n/d and d * (n/d) = n.
  std::optional<std::pair<Element, Element>> witness;
};

/// Certifies one element. Composite witnesses are searched over divisors d
/// of the grade with 1 < d <= sqrt(n), d ascending, candidates in canonical
/// enumeration order; the first witness wins, so certificates are
/// deterministic. A prime grade has no such divisors and certifies prime
/// immediately.
Certificate certify(const Element& w, const FactorizerConfig& config = {});

}  // namespace boolsemi
