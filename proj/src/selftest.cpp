#include "boolsemi/selftest.hpp"

#include <random>
#include <vector>

#include "boolsemi/element.hpp"
#include "boolsemi/text.hpp"
#include "boolsemi/transform.hpp"

namespace boolsemi {

namespace {

Element random_element(std::mt19937_64& rng, unsigned rank, std::uint64_t max_coeff) {
  std::uniform_int_distribution<std::uint64_t> dist(0, max_coeff);
  std::vector<std::uint64_t> coeffs(std::size_t{1} << rank);
  for (auto& c : coeffs) c = dist(rng);
  return Element(std::move(coeffs));
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, std::uint64_t cases_per_rank, unsigned max_rank) {
  SelftestReport report;
  std::mt19937_64 rng(seed);

  auto fail = [&](const std::string& law, const Element& u, const Element& v, const Element& w) {
    report.ok = false;
    report.failure = law + " [u=" + format_element(u) + " v=" + format_element(v) +
                     " w=" + format_element(w) + "]";
  };

  for (unsigned rank = 1; rank <= max_rank && report.ok; ++rank) {
    const Element zero = Element::zero(rank);
    const Element one = Element::identity(rank);
    for (std::uint64_t i = 0; i < cases_per_rank && report.ok; ++i) {
      Element u = random_element(rng, rank, 10);
      Element v = random_element(rng, rank, 10);
      Element w = random_element(rng, rank, 10);
      ++report.cases;

      if (add(u, v) != add(v, u)) { fail("addition commutativity", u, v, w); break; }
      if (mul(u, v) != mul(v, u)) { fail("multiplication commutativity", u, v, w); break; }
      if (add(add(u, v), w) != add(u, add(v, w))) { fail("addition associativity", u, v, w); break; }
      if (mul(mul(u, v), w) != mul(u, mul(v, w))) { fail("multiplication associativity", u, v, w); break; }
      if (mul(u, add(v, w)) != add(mul(u, v), mul(u, w))) { fail("distributivity", u, v, w); break; }
      if (add(u, zero) != u) { fail("additive identity", u, v, w); break; }
      if (mul(u, one) != u) { fail("multiplicative identity", u, v, w); break; }
      if (mul(u, zero) != zero) { fail("multiplicative absorption", u, v, w); break; }
      if (add(u, v).grade() != u.grade() + v.grade()) { fail("grade additivity", u, v, w); break; }
      if (mul(u, v).grade() != u.grade() * v.grade()) { fail("grade multiplicativity", u, v, w); break; }

      Signature su = transform(u);
      Signature sv = transform(v);
      Signature sprod = transform(mul(u, v));
      Signature ssum = transform(add(u, v));
      for (std::size_t j = 0; j < su.values.size(); ++j) {
        if (sprod.values[j] != su.values[j] * sv.values[j] ||
            ssum.values[j] != su.values[j] + sv.values[j]) {
          fail("character homomorphism", u, v, w);
          break;
        }
      }
      if (!report.ok) break;
      if (inverse_transform(su) != u) { fail("transform round-trip", u, v, w); break; }
      if (mul_via_transform(u, v) != mul(u, v)) { fail("transform-path convolution", u, v, w); break; }
    }

    if (!report.ok) break;
    // Unit-group structure: exactly the 2^l grade-1 elements, each its own
    // inverse.
    for (std::uint32_t bits = 0; bits < (1u << rank); ++bits) {
      Element g = Element::unit(GroupIndex{rank, bits});
      if (!g.is_unit() || mul(g, g) != one) {
        fail("unit involution", g, g, one);
        break;
      }
    }
  }

  return report;
}

}  // namespace boolsemi
