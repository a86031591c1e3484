#pragma once

// Alphabets, finite words, and the two finitely presented classes of ω-words
// (lasso words u·v^ω and symbolic block words a^{k1} b a^{k2} b ...).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace omegaext {

using Symbol = char;
using Position = std::uint64_t;

/// Finite words are plain strings of single-character letters.  Alphabet
/// membership is checked where an alphabet is in play (automata, oracles,
/// homomorphisms), not carried by every word.
using FiniteWord = std::string;

/// An ordered finite set of distinct letters.
class Alphabet {
 public:
  /// Throws `InvalidArgument` when `letters` is empty or has duplicates.
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }

  bool contains(Symbol s) const noexcept { return index_[to_byte(s)] >= 0; }
  std::optional<std::size_t> find(Symbol s) const noexcept;
  /// Index of `s`; throws `AlphabetMismatch` for foreign letters.
  std::size_t index(Symbol s) const;

  bool contains_word(std::string_view w) const noexcept;
  /// Throws `AlphabetMismatch` naming `what` if `w` has a foreign letter.
  void require_word(std::string_view w, std::string_view what) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  static std::size_t to_byte(Symbol s) {
    return static_cast<unsigned char>(s);
  }

  std::string letters_;
  std::array<std::int16_t, 256> index_;
};

/// Ultimately periodic word prefix·period^ω.  The presentation is kept as
/// given; `canonical()` and `up_equal` work on the denoted ω-word.
class UPWord {
 public:
  /// Throws `InvalidArgument` when `period` is empty.
  UPWord(FiniteWord prefix, FiniteWord period);

  const FiniteWord& prefix() const noexcept { return prefix_; }
  const FiniteWord& period() const noexcept { return period_; }
  std::size_t presentation_size() const noexcept {
    return prefix_.size() + period_.size();
  }

  Symbol letter_at(Position i) const;

  /// Shortest prefix and primitive period denoting the same word.
  UPWord canonical() const;

  /// Structural (presentation) equality.
  friend bool operator==(const UPWord&, const UPWord&) = default;

 private:
  FiniteWord prefix_;
  FiniteWord period_;
};

/// Primitive root of a nonempty word: the shortest r with w = r^k.
FiniteWord primitive_root(std::string_view w);

/// True iff both presentations denote the same ω-word.
bool up_equal(const UPWord& a, const UPWord& b);

/// Block length sequences k_1, k_2, ... restricted to a decidable fragment.
struct ConstantLengths {
  std::uint64_t value;
  friend bool operator==(const ConstantLengths&, const ConstantLengths&) = default;
};
/// k_n = slope·n + offset for n >= 1, slope >= 1.
struct AffineLengths {
  std::uint64_t slope;
  std::int64_t offset;
  friend bool operator==(const AffineLengths&, const AffineLengths&) = default;
};
struct EventuallyPeriodicLengths {
  std::vector<std::uint64_t> head;
  std::vector<std::uint64_t> cycle;
  friend bool operator==(const EventuallyPeriodicLengths&,
                         const EventuallyPeriodicLengths&) = default;
};
using BlockLengths =
    std::variant<ConstantLengths, AffineLengths, EventuallyPeriodicLengths>;

/// The ω-word x^{k1} y x^{k2} y ... with infinitely many separators y.
class BlockWord {
 public:
  BlockWord(Symbol block_letter, Symbol separator_letter, BlockLengths lengths);

  Symbol block_letter() const noexcept { return block_; }
  Symbol separator_letter() const noexcept { return separator_; }
  const BlockLengths& lengths() const noexcept { return lengths_; }

  /// k_n for n >= 1.
  std::uint64_t block_length(std::uint64_t n) const;

  /// limsup k_n = ∞; true exactly for affine sequences.
  bool unbounded_blocks() const noexcept {
    return std::holds_alternative<AffineLengths>(lengths_);
  }

  /// The same word as a lasso, when the block sequence is eventually
  /// periodic (constant or eventually periodic lengths).
  std::optional<UPWord> to_up() const;

  Symbol letter_at(Position i) const;

  friend bool operator==(const BlockWord&, const BlockWord&) = default;

 private:
  Symbol block_;
  Symbol separator_;
  BlockLengths lengths_;
};

using OmegaWord = std::variant<UPWord, BlockWord>;
/// Result type of homomorphic images: erasure can make ω-words finite.
using AnyWord = std::variant<FiniteWord, UPWord, BlockWord>;

Symbol letter_at(const OmegaWord& w, Position i);

/// Reads an ω-word left to right in amortised constant time per letter.
class LetterStream {
 public:
  explicit LetterStream(const OmegaWord& w);

  Symbol next();
  Position position() const noexcept { return pos_; }

 private:
  const OmegaWord* word_;
  Position pos_ = 0;
  // Block-word cursor state.
  std::uint64_t block_index_ = 1;
  std::uint64_t offset_in_block_ = 0;
  std::uint64_t current_length_ = 0;
};

/// w·x.
UPWord concat(std::string_view w, const UPWord& x);

/// head_1 head_2 ... (cycle_1 cycle_2 ...)^ω.  Throws `InvalidArgument` when
/// the cycle concatenates to the empty word.
UPWord omega_product(const std::vector<FiniteWord>& head,
                     const std::vector<FiniteWord>& cycle);

/// A map Σ → Γ* extended to words.
class Homomorphism {
 public:
  /// Every source letter needs an image over `target`.
  Homomorphism(Alphabet source, Alphabet target,
               std::map<Symbol, FiniteWord> images);

  /// Identity on `source` except that `erased` maps to ε.
  static Homomorphism erasing(const Alphabet& source, Symbol erased);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const FiniteWord& image(Symbol s) const;
  bool letter_to_letter() const noexcept;
  /// Letters mapped to ε.
  std::vector<Symbol> erased_letters() const;

 private:
  Alphabet source_;
  Alphabet target_;
  std::map<Symbol, FiniteWord> images_;
};

FiniteWord apply_hom(const Homomorphism& h, const FiniteWord& w);
/// Image of a lasso; finite when the period is erased entirely.
AnyWord apply_hom(const Homomorphism& h, const UPWord& w);
/// Supported for letter-to-letter maps and for maps that only erase letters
/// other than the block and separator letters.  Other combinations throw
/// `UnsupportedInput`.
AnyWord apply_hom(const Homomorphism& h, const BlockWord& w);
AnyWord apply_hom(const Homomorphism& h, const AnyWord& w);

/// Shortlex (length, then lexicographic in alphabet order) comparison.
bool shortlex_less(std::string_view a, std::string_view b,
                   const Alphabet& alphabet);

/// All words over `alphabet` of length <= max_length, in shortlex order.
std::vector<FiniteWord> words_up_to(const Alphabet& alphabet,
                                    std::size_t max_length);

}  // namespace omegaext
