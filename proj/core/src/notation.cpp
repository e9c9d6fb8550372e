#include "sdc/notation.hpp"

#include <stdexcept>
#include <vector>

namespace sdc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

SkewPoly<Felt> parse_poly(const Field& f, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("poly: empty text");
  std::vector<Felt> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = comma == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, comma - pos);
    coeffs.push_back(parse_element(f, trim(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  while (!coeffs.empty() && f.is_zero(coeffs.back())) coeffs.pop_back();
  return {std::move(coeffs)};
}

std::string format_poly(const Field& f, const SkewPoly<Felt>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (i) out += ',';
    out += format_element(f, p.c[i]);
  }
  return out;
}

SkewPoly<Felt> parse_paper_notation(const Field& f, std::string_view text) {
  text = trim(text);
  if (text.find(',') != std::string_view::npos) return parse_poly(f, text);
  if (text.empty()) throw std::invalid_argument("poly: empty text");

  std::vector<Felt> coeffs;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    if (ch >= '0' && ch <= '9') {
      // Single-digit prime-subfield coefficient; multi-digit literals never
      // occur in the concatenated form.
      coeffs.push_back(parse_element(f, text.substr(i, 1)));
      ++i;
      continue;
    }
    if (ch == 't') {
      if (i + 1 < text.size() && text[i + 1] == '^') {
        std::size_t j = i + 2;
        if (j < text.size() && text[j] == '{') {
          std::size_t close = text.find('}', j);
          if (close == std::string_view::npos)
            throw std::invalid_argument("poly: unterminated '{' in '" +
                                        std::string(text) + "'");
          coeffs.push_back(
              parse_element(f, "t^" + std::string(text.substr(j + 1, close - j - 1))));
          i = close + 1;
          continue;
        }
        std::size_t k = j;
        while (k < text.size() && text[k] >= '0' && text[k] <= '9') ++k;
        if (k == j)
          throw std::invalid_argument("poly: missing exponent after 't^' in '" +
                                      std::string(text) + "'");
        if (k - j > 1)
          throw std::invalid_argument(
              "poly: ambiguous exponent '" + std::string(text.substr(i, k - i)) +
              "' at offset " + std::to_string(i) +
              " (could split after any digit; use braces or the comma form)");
        coeffs.push_back(parse_element(f, text.substr(i, 3)));
        i = k;
        continue;
      }
      coeffs.push_back(f.t());
      ++i;
      continue;
    }
    throw std::invalid_argument("poly: unexpected character '" + std::string(1, ch) +
                                "' at offset " + std::to_string(i));
  }
  if (coeffs.empty()) throw std::invalid_argument("poly: no coefficients");
  while (!coeffs.empty() && f.is_zero(coeffs.back())) coeffs.pop_back();
  return {std::move(coeffs)};
}

}  // namespace sdc
