#include "boolsemi/factorizer.hpp"

#include <cassert>
#include <stdexcept>

#include "boolsemi/errors.hpp"
#include "boolsemi/grade.hpp"
#include "boolsemi/transform.hpp"

namespace boolsemi {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor requires n >= 2");
  if (n % 2 == 0) return 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return f;
  return n;
}

unsigned prime_factor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_factor_count requires n >= 1");
  unsigned count = 0;
  while (n > 1) {
    std::uint64_t f = smallest_prime_factor(n);
    do {
      n /= f;
      ++count;
    } while (n % f == 0);
  }
  return count;
}

std::optional<Element> divide(const Element& w, const Element& u, const FactorizerConfig& config) {
  if (w.rank() != u.rank()) throw std::invalid_argument("element rank mismatch");
  if (u.is_zero()) throw std::invalid_argument("division by the zero element");
  if (w.grade() % u.grade() != 0) return std::nullopt;  // grades multiply

  Signature sw = transform(w);
  Signature su = transform(u);

  bool u_has_zero = false;
  for (std::size_t j = 0; j < su.values.size(); ++j) {
    if (su.values[j] == 0) {
      u_has_zero = true;
      // A vanishing character of u forces the same character of any
      // multiple of u to vanish.
      if (sw.values[j] != 0) return std::nullopt;
    }
  }

  if (!u_has_zero) {
    // The quotient signature is forced pointwise, so the quotient is unique
    // if it exists at all.
    Signature q;
    q.values.resize(su.values.size());
    for (std::size_t j = 0; j < su.values.size(); ++j) {
      std::int64_t d = sw.values[j] / su.values[j];
      if (d * su.values[j] != sw.values[j]) return std::nullopt;
      q.values[j] = d;
    }
    auto v = try_inverse_transform(q);
    if (!v) return std::nullopt;
    assert(mul(u, *v) == w);
    return v;
  }

  // Ambiguous characters: scan the quotient grade in canonical order.
  GradeSpec quotient{w.rank(), w.grade() / u.grade()};
  std::uint64_t candidates = grade_size(quotient);
  if (candidates > config.fallback_budget)
    throw budget_exceeded("divide fallback budget", candidates, config.fallback_budget);
  for (const Element& v : enumerate_grade(quotient, config.fallback_budget))
    if (mul(u, v) == w) return v;
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kZero: return "Zero";
    case Verdict::kUnit: return "Unit";
    case Verdict::kPrime: return "Prime";
    case Verdict::kComposite: return "Composite";
  }
  return "?";
}

Certificate certify(const Element& w, const FactorizerConfig& config) {
  if (w.is_zero()) return {Verdict::kZero, std::nullopt};
  if (w.is_unit()) return {Verdict::kUnit, std::nullopt};
  const std::uint64_t n = w.grade();
  std::uint64_t scanned = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (const Element& u : enumerate_grade({w.rank(), d}, config.scan_budget)) {
      if (++scanned > config.scan_budget)
        throw budget_exceeded("certify scan budget", scanned, config.scan_budget);
      if (auto v = divide(w, u, config)) {
        // d >= 2 and n/d >= d >= 2: neither factor is a unit.
        return {Verdict::kComposite, std::make_pair(u, std::move(*v))};
      }
    }
  }
  return {Verdict::kPrime, std::nullopt};
}

}  // namespace boolsemi
