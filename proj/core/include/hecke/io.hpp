#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hecke/hyp_series.hpp"
#include "hecke/multiplicative.hpp"
#include "hecke/series.hpp"
#include "hecke/spectral.hpp"

namespace hecke::io {

// Serialized documents are JSON with a "kind" discriminator, fixed field
// order, two-space indentation and a trailing newline, so equal values
// always serialize to equal bytes.  Scalars travel as their canonical text
// form ("-1/2", "2/3*i", "1/2-5/4*i").

std::string to_document(const TruncatedSeries& series);
std::string to_document(const HypSeries& series);
std::string to_document(const EigenReport& report);
std::string to_document(const CMReport& report);

// Inverses of the serializers.  Malformed text or a document of the wrong
// kind throws ParseError; structurally valid documents carrying illegal
// values (e.g. a non-positive integer lower parameter) throw the same
// errors as the corresponding constructors.

TruncatedSeries series_from_document(std::string_view text);
HypSeries hyp_from_document(std::string_view text);
EigenReport eigen_report_from_document(std::string_view text);
CMReport cm_report_from_document(std::string_view text);

/// Comma-separated scalars ("1, 1/2, -2/3*i") to a vector; the empty string
/// (or all-whitespace) is the empty vector.  Throws ParseError on malformed
/// entries.
std::vector<GaussianRational> parse_scalar_list(std::string_view text);

}  // namespace hecke::io
