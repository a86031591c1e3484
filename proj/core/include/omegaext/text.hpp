#pragma once

// Text syntax for words:
//   finite word   ab1a          (the empty word is written ε)
//   lasso word    ab(ba)^w      (empty prefix: (ab)^w)
//   block word    blocks(a,b;affine 1 0)
//                 blocks(a,b;constant 3)
//                 blocks(a,b;periodic 2 5 | 3 1)   head | cycle
// Parsing is exact and `format_*` round-trips.

#include <string>
#include <string_view>

#include "omegaext/words.hpp"

namespace omegaext {

inline constexpr std::string_view kEpsilon = "ε";

FiniteWord parse_finite_word(std::string_view text);
UPWord parse_up_word(std::string_view text);
BlockWord parse_block_word(std::string_view text);
/// Block word when the text starts with `blocks(`, lasso word otherwise.
OmegaWord parse_omega_word(std::string_view text);
/// Any of the three forms.
AnyWord parse_any_word(std::string_view text);

std::string format_word(const FiniteWord& w);
std::string format_word(const UPWord& w);
std::string format_word(const BlockWord& w);
std::string format_word(const OmegaWord& w);
std::string format_word(const AnyWord& w);

/// True for characters that may appear as letters in the text syntax.
bool is_letter_char(char c) noexcept;

}  // namespace omegaext
