#include <random>
#include <vector>

#include "doctest.h"

#include "boolsemi/census.hpp"
#include "boolsemi/element.hpp"
#include "boolsemi/errors.hpp"
#include "boolsemi/factorizer.hpp"
#include "boolsemi/grade.hpp"

using namespace boolsemi;

namespace {

Element elem(std::vector<std::uint64_t> coeffs) { return Element(std::move(coeffs)); }

Element random_element(std::mt19937_64& rng, unsigned rank, std::uint64_t max_coeff = 6) {
  std::uniform_int_distribution<std::uint64_t> dist(0, max_coeff);
  std::vector<std::uint64_t> coeffs(std::size_t{1} << rank);
  for (auto& c : coeffs) c = dist(rng);
  return Element(std::move(coeffs));
}

// g1 + (n-1) g2 as an element of rank l
Element pair_element(unsigned l, std::uint32_t g1, std::uint32_t g2, std::uint64_t n) {
  std::vector<std::uint64_t> coeffs(std::size_t{1} << l, 0);
  coeffs[g1] += 1;
  coeffs[g2] += n - 1;
  return Element(std::move(coeffs));
}

}  // namespace

TEST_CASE("smallest prime factor by trial division") {
  CHECK(smallest_prime_factor(15) == 3);
  CHECK(smallest_prime_factor(49) == 7);
  CHECK(smallest_prime_factor(2) == 2);
  CHECK(smallest_prime_factor(97) == 97);
  CHECK(smallest_prime_factor(91) == 7);
  CHECK(smallest_prime_factor(10403) == 101);  // 101 * 103
  CHECK_THROWS_AS(smallest_prime_factor(1), std::invalid_argument);
  CHECK_THROWS_AS(smallest_prime_factor(0), std::invalid_argument);
}

TEST_CASE("prime factor count with multiplicity") {
  CHECK(prime_factor_count(1) == 0);
  CHECK(prime_factor_count(2) == 1);
  CHECK(prime_factor_count(12) == 3);
  CHECK(prime_factor_count(323) == 2);
  CHECK(prime_factor_count(1024) == 10);
  CHECK_THROWS_AS(prime_factor_count(0), std::invalid_argument);
}

TEST_CASE("divide finds a quotient or proves none exists") {
  // quotients are canonical-order-first, not unique: [2,2] = [1,1]*[2,0] too
  auto q = divide(elem({2, 2}), elem({1, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == elem({2, 0}));
  CHECK(mul(elem({1, 1}), *q) == elem({2, 2}));

  // a vanishing character of u with a nonvanishing one of w: no quotient
  CHECK(!divide(elem({3, 1}), elem({1, 1})).has_value());
  // grade of u does not divide grade of w
  CHECK(!divide(elem({3, 1}), elem({2, 1})).has_value());
  // dividing by a unit permutes
  Element w = elem({5, 0, 7, 2});
  auto by_unit = divide(w, Element::unit({2, 0b01}));
  REQUIRE(by_unit.has_value());
  for (std::size_t s = 0; s < 4; ++s) CHECK((*by_unit)[s] == w[s ^ 0b01]);

  CHECK_THROWS_AS(divide(elem({2, 2}), Element::zero(1)), std::invalid_argument);
  CHECK_THROWS_AS(divide(elem({2, 2}), elem({1, 1, 1, 1})), std::invalid_argument);

  // dividing the zero element by anything nonzero gives zero
  auto z = divide(Element::zero(1), elem({1, 1}));
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
}

TEST_CASE("divide reproduces the dividend on random factor pairs") {
  std::mt19937_64 rng(59);
  for (unsigned l = 1; l <= 3; ++l) {
    // keep the zero-character fallback grades small enough to scan
    const std::uint64_t max_coeff = l == 3 ? 2 : 6;
    for (int i = 0; i < 100; ++i) {
      Element u = random_element(rng, l, max_coeff);
      Element v = random_element(rng, l, max_coeff);
      if (u.is_zero()) continue;
      Element w = mul(u, v);
      auto q = divide(w, u);
      REQUIRE(q.has_value());
      CHECK(mul(u, *q) == w);
    }
  }
}

TEST_CASE("divide fallback is budgeted, distinctly from a negative answer") {
  // [2,2] has a vanishing character, so dividing by it needs the scan
  Element u = elem({2, 2});
  Element w = mul(u, elem({3, 3}));
  FactorizerConfig tight;
  tight.fallback_budget = 1;
  CHECK_THROWS_AS(divide(w, u, tight), budget_exceeded);
  auto q = divide(w, u);  // default budget succeeds
  REQUIRE(q.has_value());
  CHECK(mul(u, *q) == w);
}

TEST_CASE("certify verdicts on the worked examples") {
  CHECK(certify(elem({1, 3})).verdict == Verdict::kPrime);
  CHECK(certify(elem({0, 1})).verdict == Verdict::kUnit);
  CHECK(certify(Element::zero(2)).verdict == Verdict::kZero);

  Certificate c = certify(elem({2, 2}));
  CHECK(c.verdict == Verdict::kComposite);
  REQUIRE(c.witness.has_value());
  // deterministic first witness: divisor grades ascending, canonical order
  CHECK(c.witness->first == elem({2, 0}));
  CHECK(c.witness->second == elem({1, 1}));
  CHECK(mul(c.witness->first, c.witness->second) == elem({2, 2}));

  // prime grades certify prime with no search at all
  for (const Element& e : enumerate_grade({1, 5})) CHECK(certify(e).verdict == Verdict::kPrime);
  for (const Element& e : enumerate_grade({2, 7})) CHECK(certify(e).verdict == Verdict::kPrime);
}

TEST_CASE("composite witnesses are sound") {
  for (unsigned l = 1; l <= 2; ++l) {
    for (std::uint64_t n : {4, 6, 8, 9}) {
      for (const Element& e : enumerate_grade({l, n})) {
        Certificate c = certify(e);
        if (c.verdict != Verdict::kComposite) continue;
        REQUIRE(c.witness.has_value());
        CHECK(mul(c.witness->first, c.witness->second) == e);
        CHECK(!c.witness->first.is_unit());
        CHECK(!c.witness->second.is_unit());
        CHECK(c.witness->first.grade() <= c.witness->second.grade());
      }
    }
  }
}

TEST_CASE("certify agrees with the product-union oracle on small grades") {
  for (unsigned l = 1; l <= 2; ++l) {
    for (std::uint64_t n = 2; n <= 8; ++n) {
      std::vector<Element> oracle = composites_of_grade({l, n});
      for (const Element& e : enumerate_grade({l, n})) {
        bool in_oracle = std::binary_search(oracle.rbegin(), oracle.rend(), e);
        CHECK((certify(e).verdict == Verdict::kComposite) == in_oracle);
      }
    }
  }
}

TEST_CASE("the identity-plus-multiple family certifies prime") {
  for (unsigned l = 1; l <= 3; ++l) {
    for (std::uint64_t n = 2; n <= 40; ++n) {
      for (std::uint32_t h = 1; h < (1u << l); ++h) {
        CHECK(certify(pair_element(l, 0, h, n)).verdict == Verdict::kPrime);
      }
    }
  }
  // unit multiples of the family: g1 + (n-1) g2 for any g1 != g2
  for (unsigned l = 1; l <= 3; ++l) {
    for (std::uint64_t n : {6, 12, 36}) {
      for (std::uint32_t g1 = 0; g1 < (1u << l); ++g1)
        for (std::uint32_t g2 = 0; g2 < (1u << l); ++g2)
          if (g1 != g2) CHECK(certify(pair_element(l, g1, g2, n)).verdict == Verdict::kPrime);
    }
  }
}

TEST_CASE("certify scan budget is explicit") {
  FactorizerConfig tight;
  tight.scan_budget = 3;
  CHECK_THROWS_AS(certify(elem({5, 1, 3, 3}), tight), budget_exceeded);
}
