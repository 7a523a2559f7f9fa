#pragma once

#include <string>
#include <string_view>

#include "boolsemi/census.hpp"
#include "boolsemi/element.hpp"
#include "boolsemi/ford.hpp"
#include "boolsemi/transform.hpp"

namespace boolsemi {

/// Element text format: comma-separated coefficients in index order, no
/// whitespace, e.g. "3,1". Rank is inferred from the count, which must be a
/// power of two in [2, 64].
Element parse_element(std::string_view text);
std::string format_element(const Element& u);

/// Signature text format: comma-separated signed integers in
/// character-index order.
Signature parse_signature(std::string_view text);
std::string format_signature(const Signature& sig);

// Table writers. The header is always emitted; optional fields are left
// empty. Doubles print with %.12g, so output is byte-stable across runs.
std::string format_double(double x);

std::string census_csv_header();
std::string census_csv_row(const CensusResult& r);

std::string density_csv_header();
std::string density_csv_row(const DensityRecord& r);

}  // namespace boolsemi
