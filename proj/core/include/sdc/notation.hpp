#pragma once

#include <string>
#include <string_view>

#include "sdc/skew.hpp"

namespace sdc {

/// Canonical polynomial text: comma-separated element tokens, ascending
/// ("t^20,t^19,1" = t^20 + t^19 x + x^2).
SkewPoly<Felt> parse_poly(const Field& f, std::string_view text);
std::string format_poly(const Field& f, const SkewPoly<Felt>& p);

/// Accepts the canonical comma-separated form, or a concatenated token
/// stream ("1t^3t^7t1") when tokenization is unambiguous.  An exponent
/// written as a bare multi-digit run ("t^51", t^5*1 vs t^{51}) is rejected
/// with the offending span; braces ("t^{51}") disambiguate.
SkewPoly<Felt> parse_paper_notation(const Field& f, std::string_view text);

}  // namespace sdc
