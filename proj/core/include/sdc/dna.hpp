#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/codec.hpp"

namespace sdc {

/// Nucleotide correspondence over F_4: 1 <-> A, t^2 <-> T, 0 <-> G, t <-> C.
std::string f4_to_dna(const Field& f4, std::span<const Felt> v);
std::vector<Felt> dna_to_f4(const Field& f4, std::string_view word);

/// Watson-Crick complement: adds t coordinatewise (A<->T, G<->C).
Felt complement(const Field& f4, Felt a);
std::vector<Felt> complement(const Field& f4, std::span<const Felt> v);
std::string complement(std::string_view word);

/// a^{rc} = a^r + t*(1 + x + ... + x^n), verified against the direct
/// reverse-then-complement path.
SkewPoly<Felt> reverse_complement_poly(const FieldContext& ctx,
                                       const SkewPoly<Felt>& a, int n);

/// Coefficient symmetry g_i = g_{m-i}.
bool is_palindromic(const SkewPoly<Felt>& g);

/// Twisted symmetry g_i = sigma(g_{m-i}) - delta(g_{m-i+1}) for i = 1..m;
/// coefficient indices beyond the degree read as 0.
bool is_td_palindromic(const FieldContext& ctx, const SkewPoly<Felt>& g);

/// Reversal closure via the basis: the reversal of every generator row is a
/// codeword (reversal is linear, so basis closure suffices).
bool is_reversible(const LinearCode& code);

/// True iff the all-t vector is a codeword (complement(c) = c + t*1).
bool is_complement_closed(const Field& f4, const LinearCode& code);

/// Reversible and complement-closed.
bool is_dna_code(const Field& f4, const LinearCode& code);

/// All q^k codewords as DNA words in sorted order.  Throws when q^k
/// exceeds the budget.
std::vector<std::string> emit_dna_table(const Field& f4, const LinearCode& code,
                                        std::uint64_t max_words);

/// Order-independent digest of a word set: FNV-1a 64 over the sorted words
/// joined by newlines, rendered as 16 hex digits.
std::string dna_set_digest(std::vector<std::string> words);

}  // namespace sdc
