#include "boolsemi/text.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace boolsemi {

namespace {

template <typename Int>
std::vector<Int> parse_csv_ints(std::string_view text, const char* what) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Int value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument(std::string("malformed ") + what + " near '" +
                                  std::string(field) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <typename Int>
std::string join_csv(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Element parse_element(std::string_view text) {
  return Element(parse_csv_ints<std::uint64_t>(text, "coefficient"));
}

std::string format_element(const Element& u) { return join_csv(u.coeffs()); }

Signature parse_signature(std::string_view text) {
  Signature sig{parse_csv_ints<std::int64_t>(text, "character value")};
  if (sig.values.size() < 2 || (sig.values.size() & (sig.values.size() - 1)) != 0)
    throw std::invalid_argument("signature length must be a power of two >= 2");
  return sig;
}

std::string format_signature(const Signature& sig) { return join_csv(sig.values); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string census_csv_header() { return "l,n,grade_size,theta,prime_count,omega,p_minus,normalized"; }

std::string census_csv_row(const CensusResult& r) {
  std::string row = std::to_string(r.rank) + ',' + std::to_string(r.grade) + ',' +
                    std::to_string(r.grade_size) + ',' + std::to_string(r.theta) + ',' +
                    std::to_string(r.prime_count) + ',' + std::to_string(r.omega) + ',' +
                    std::to_string(r.p_minus) + ',';
  if (r.normalized) row += format_double(*r.normalized);
  return row;
}

std::string density_csv_header() { return "m,n,cardinality,normalized"; }

std::string density_csv_row(const DensityRecord& r) {
  return std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.cardinality) +
         ',' + (r.normalized > 0 ? format_double(r.normalized) : std::string());
}

}  // namespace boolsemi
