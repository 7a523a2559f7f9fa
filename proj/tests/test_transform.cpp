#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"

#include "boolsemi/element.hpp"
#include "boolsemi/errors.hpp"
#include "boolsemi/grade.hpp"
#include "boolsemi/transform.hpp"

using namespace boolsemi;

namespace {

Element elem(std::vector<std::uint64_t> coeffs) { return Element(std::move(coeffs)); }

Signature sig(std::vector<std::int64_t> values) { return Signature{std::move(values)}; }

Element random_element(std::mt19937_64& rng, unsigned rank, std::uint64_t max_coeff) {
  std::uniform_int_distribution<std::uint64_t> dist(0, max_coeff);
  std::vector<std::uint64_t> coeffs(std::size_t{1} << rank);
  for (auto& c : coeffs) c = dist(rng);
  return Element(std::move(coeffs));
}

}  // namespace

TEST_CASE("transform examples") {
  CHECK(transform(elem({3, 1})) == sig({4, 2}));
  CHECK(transform(elem({9, 0})) == sig({9, 9}));
  CHECK(transform(elem({5, 0, 0, 0})) == sig({5, 5, 5, 5}));
  CHECK(transform(elem({1, 1, 1, 1})) == sig({4, 0, 0, 0}));
  CHECK(transform(Element::zero(2)) == sig({0, 0, 0, 0}));
  // trivial character is the grade; all values share its parity and bound
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Element u = random_element(rng, 3, 20);
    Signature s = transform(u);
    CHECK(s.values[0] == static_cast<std::int64_t>(u.grade()));
    for (std::int64_t v : s.values) {
      CHECK((v - s.values[0]) % 2 == 0);
      CHECK(std::abs(v) <= s.values[0]);
    }
  }
}

TEST_CASE("walsh_hadamard is self-inverse up to the length") {
  std::vector<std::int64_t> data{3, -1, 4, 1, -5, 9, 2, 6};
  std::vector<std::int64_t> twice(data);
  walsh_hadamard(twice);
  walsh_hadamard(twice);
  for (std::size_t i = 0; i < data.size(); ++i) CHECK(twice[i] == 8 * data[i]);
}

TEST_CASE("inverse transform examples and failure reasons") {
  CHECK(inverse_transform(sig({4, 2})) == elem({3, 1}));
  CHECK(inverse_transform(sig({4, 0, 0, 0})) == elem({1, 1, 1, 1}));
  CHECK_THROWS_AS(inverse_transform(sig({3, 2})), not_integral);
  CHECK_THROWS_AS(inverse_transform(sig({2, 4})), negative_coefficient);

  InverseFailure why;
  CHECK(!try_inverse_transform(sig({3, 2}), &why));
  CHECK(why == InverseFailure::kNotIntegral);
  CHECK(!try_inverse_transform(sig({2, 4}), &why));
  CHECK(why == InverseFailure::kNegative);
  CHECK_THROWS_AS(try_inverse_transform(sig({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("round-trip is exact on whole grades") {
  for (unsigned l = 1; l <= 3; ++l)
    for (std::uint64_t n = 0; n <= 10; ++n)
      for (const Element& e : enumerate_grade({l, n}))
        CHECK(inverse_transform(transform(e)) == e);
}

TEST_CASE("round-trip is exact on random elements") {
  std::mt19937_64 rng(23);
  for (unsigned l = 1; l <= 4; ++l)
    for (int i = 0; i < 200; ++i) {
      Element e = random_element(rng, l, 1'000'000);
      CHECK(inverse_transform(transform(e)) == e);
    }
}

TEST_CASE("transform is a homomorphism") {
  std::mt19937_64 rng(31);
  for (unsigned l = 1; l <= 4; ++l) {
    for (int i = 0; i < 200; ++i) {
      Element u = random_element(rng, l, 10);
      Element v = random_element(rng, l, 10);
      Signature su = transform(u);
      Signature sv = transform(v);
      Signature sprod = transform(mul(u, v));
      Signature ssum = transform(add(u, v));
      for (std::size_t j = 0; j < su.values.size(); ++j) {
        CHECK(sprod.values[j] == su.values[j] * sv.values[j]);
        CHECK(ssum.values[j] == su.values[j] + sv.values[j]);
      }
    }
  }
}

TEST_CASE("image of a grade is the symmetric progression") {
  CHECK(image_of_grade({1, 3}, 1) == std::vector<std::int64_t>{-3, -1, 1, 3});
  CHECK(image_of_grade({2, 2}, 1) == std::vector<std::int64_t>{-2, 0, 2});
  for (unsigned l = 1; l <= 3; ++l)
    for (std::uint64_t n = 0; n <= 7; ++n) CHECK(image_of_grade({l, n}, 0) == std::vector<std::int64_t>{static_cast<std::int64_t>(n)});
  CHECK_THROWS_AS(image_of_grade({2, 3}, 4), std::invalid_argument);
}

TEST_CASE("closed-form image equals the enumerated image") {
  for (unsigned l = 1; l <= 3; ++l)
    for (std::uint64_t n = 0; n <= 12; ++n)
      for (unsigned j = 0; j < (1u << l); ++j)
        CHECK(image_of_grade({l, n}, j) == image_of_grade_direct({l, n}, j));
  CHECK_THROWS_AS(image_of_grade_direct({3, 50}, 1, 100), budget_exceeded);
}

TEST_CASE("transform-path convolution is bit-identical to the direct one") {
  std::mt19937_64 rng(47);
  for (unsigned l = 1; l <= 4; ++l)
    for (int i = 0; i < 200; ++i) {
      Element u = random_element(rng, l, 50);
      Element v = random_element(rng, l, 50);
      CHECK(mul_via_transform(u, v) == mul(u, v));
    }
  // the transform path needs the grade product to stay signed
  Element big = elem({std::uint64_t{1} << 32, 0});
  Element other = elem({std::uint64_t{1} << 31, 0});
  CHECK(mul(big, other) == elem({std::uint64_t{1} << 63, 0}));
  CHECK_THROWS_AS(mul_via_transform(big, other), std::overflow_error);
}
