#include "omegaext/words.hpp"

#include <algorithm>
#include <numeric>

#include "omegaext/error.hpp"

namespace omegaext {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  index_.fill(-1);
  if (letters_.empty()) throw InvalidArgument("alphabet must be nonempty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto& slot = index_[to_byte(letters_[i])];
    if (slot >= 0) {
      throw InvalidArgument(std::string("duplicate letter '") + letters_[i] +
                            "' in alphabet");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

std::optional<std::size_t> Alphabet::find(Symbol s) const noexcept {
  const auto i = index_[to_byte(s)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

std::size_t Alphabet::index(Symbol s) const {
  const auto i = index_[to_byte(s)];
  if (i < 0) {
    throw AlphabetMismatch(std::string("letter '") + s +
                           "' is not in alphabet {" + letters_ + "}");
  }
  return static_cast<std::size_t>(i);
}

bool Alphabet::contains_word(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(),
                     [this](Symbol s) { return contains(s); });
}

void Alphabet::require_word(std::string_view w, std::string_view what) const {
  for (Symbol s : w) {
    if (!contains(s)) {
      throw AlphabetMismatch(std::string(what) + ": letter '" + s +
                             "' is not in alphabet {" + letters_ + "}");
    }
  }
}

// ------------------------------------------------------------------ UPWord

UPWord::UPWord(FiniteWord prefix, FiniteWord period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw InvalidArgument("UP word period must be nonempty");
}

Symbol UPWord::letter_at(Position i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

FiniteWord primitive_root(std::string_view w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return FiniteWord(w.substr(0, d));
  }
  return FiniteWord(w);
}

UPWord UPWord::canonical() const {
  FiniteWord period = primitive_root(period_);
  FiniteWord prefix = prefix_;
  while (!prefix.empty() && prefix.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    prefix.pop_back();
  }
  return UPWord(std::move(prefix), std::move(period));
}

bool up_equal(const UPWord& a, const UPWord& b) {
  const std::size_t horizon =
      std::max(a.prefix().size(), b.prefix().size()) +
      std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < horizon; ++i) {
    if (a.letter_at(i) != b.letter_at(i)) return false;
  }
  return true;
}

// --------------------------------------------------------------- BlockWord

BlockWord::BlockWord(Symbol block_letter, Symbol separator_letter,
                     BlockLengths lengths)
    : block_(block_letter), separator_(separator_letter),
      lengths_(std::move(lengths)) {
  if (block_ == separator_) {
    throw InvalidArgument("block letter and separator letter must differ");
  }
  if (const auto* affine = std::get_if<AffineLengths>(&lengths_)) {
    if (affine->slope == 0) {
      throw InvalidArgument("affine block lengths with slope 0 must be given "
                            "as constant lengths");
    }
    if (static_cast<std::int64_t>(affine->slope) + affine->offset < 0) {
      throw InvalidArgument("affine block lengths must be nonnegative");
    }
  }
  if (const auto* ep = std::get_if<EventuallyPeriodicLengths>(&lengths_)) {
    if (ep->cycle.empty()) {
      throw InvalidArgument("eventually periodic block lengths need a "
                            "nonempty cycle");
    }
  }
}

std::uint64_t BlockWord::block_length(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("block indices start at 1");
  return std::visit(
      [n](const auto& l) -> std::uint64_t {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLengths>) {
          return l.value;
        } else if constexpr (std::is_same_v<T, AffineLengths>) {
          return static_cast<std::uint64_t>(
              static_cast<std::int64_t>(l.slope * n) + l.offset);
        } else {
          if (n <= l.head.size()) return l.head[n - 1];
          return l.cycle[(n - 1 - l.head.size()) % l.cycle.size()];
        }
      },
      lengths_);
}

std::optional<UPWord> BlockWord::to_up() const {
  auto block = [this](std::uint64_t k) {
    FiniteWord w(k, block_);
    w.push_back(separator_);
    return w;
  };
  if (const auto* c = std::get_if<ConstantLengths>(&lengths_)) {
    return UPWord("", block(c->value));
  }
  if (const auto* ep = std::get_if<EventuallyPeriodicLengths>(&lengths_)) {
    FiniteWord prefix, period;
    for (auto k : ep->head) prefix += block(k);
    for (auto k : ep->cycle) period += block(k);
    return UPWord(std::move(prefix), std::move(period));
  }
  return std::nullopt;
}

Symbol BlockWord::letter_at(Position i) const {
  if (auto up = to_up()) return up->letter_at(i);
  Position start = 0;
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t k = block_length(n);
    if (i < start + k) return block_;
    if (i == start + k) return separator_;
    start += k + 1;
  }
}

Symbol letter_at(const OmegaWord& w, Position i) {
  return std::visit([i](const auto& x) { return x.letter_at(i); }, w);
}

// ------------------------------------------------------------ LetterStream

LetterStream::LetterStream(const OmegaWord& w) : word_(&w) {
  if (const auto* b = std::get_if<BlockWord>(word_)) {
    current_length_ = b->block_length(1);
  }
}

Symbol LetterStream::next() {
  const Position here = pos_++;
  const auto* b = std::get_if<BlockWord>(word_);
  if (b == nullptr || !b->unbounded_blocks()) return letter_at(*word_, here);
  if (offset_in_block_ < current_length_) {
    ++offset_in_block_;
    return b->block_letter();
  }
  ++block_index_;
  offset_in_block_ = 0;
  current_length_ = b->block_length(block_index_);
  return b->separator_letter();
}

// ------------------------------------------------------------- Products

UPWord concat(std::string_view w, const UPWord& x) {
  return UPWord(FiniteWord(w) + x.prefix(), x.period());
}

UPWord omega_product(const std::vector<FiniteWord>& head,
                     const std::vector<FiniteWord>& cycle) {
  FiniteWord prefix, period;
  for (const auto& u : head) prefix += u;
  for (const auto& u : cycle) period += u;
  if (period.empty()) {
    throw InvalidArgument("omega product: cycle concatenates to the empty word");
  }
  return UPWord(std::move(prefix), std::move(period));
}

// ------------------------------------------------------------ Homomorphism

Homomorphism::Homomorphism(Alphabet source, Alphabet target,
                           std::map<Symbol, FiniteWord> images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
  for (Symbol s : source_.letters()) {
    auto it = images_.find(s);
    if (it == images_.end()) {
      throw InvalidArgument(std::string("homomorphism has no image for '") + s +
                            "'");
    }
    target_.require_word(it->second, "homomorphism image");
  }
  for (const auto& [s, img] : images_) {
    if (!source_.contains(s)) {
      throw AlphabetMismatch(std::string("homomorphism maps foreign letter '") +
                             s + "'");
    }
  }
}

Homomorphism Homomorphism::erasing(const Alphabet& source, Symbol erased) {
  std::map<Symbol, FiniteWord> images;
  std::string kept;
  for (Symbol s : source.letters()) {
    if (s == erased) {
      images[s] = "";
    } else {
      images[s] = FiniteWord(1, s);
      kept.push_back(s);
    }
  }
  if (!source.contains(erased)) {
    throw AlphabetMismatch(std::string("erased letter '") + erased +
                           "' is not in the source alphabet");
  }
  if (kept.empty()) {
    throw InvalidArgument("erasing homomorphism would leave an empty alphabet");
  }
  return Homomorphism(source, Alphabet(kept), std::move(images));
}

const FiniteWord& Homomorphism::image(Symbol s) const {
  auto it = images_.find(s);
  if (it == images_.end()) {
    throw AlphabetMismatch(std::string("letter '") + s +
                           "' is not in the homomorphism's source alphabet");
  }
  return it->second;
}

bool Homomorphism::letter_to_letter() const noexcept {
  return std::all_of(images_.begin(), images_.end(),
                     [](const auto& kv) { return kv.second.size() == 1; });
}

std::vector<Symbol> Homomorphism::erased_letters() const {
  std::vector<Symbol> out;
  for (const auto& [s, img] : images_) {
    if (img.empty()) out.push_back(s);
  }
  return out;
}

FiniteWord apply_hom(const Homomorphism& h, const FiniteWord& w) {
  FiniteWord out;
  for (Symbol s : w) out += h.image(s);
  return out;
}

AnyWord apply_hom(const Homomorphism& h, const UPWord& w) {
  FiniteWord prefix = apply_hom(h, w.prefix());
  FiniteWord period = apply_hom(h, w.period());
  if (period.empty()) return prefix;
  return UPWord(std::move(prefix), std::move(period));
}

AnyWord apply_hom(const Homomorphism& h, const BlockWord& w) {
  const FiniteWord& x = h.image(w.block_letter());
  const FiniteWord& y = h.image(w.separator_letter());
  if (x.size() != 1 || y.size() != 1) {
    throw UnsupportedInput(
        "homomorphic image of a block word is only supported when the block "
        "and separator letters map to single letters");
  }
  if (x[0] == y[0]) return UPWord("", x);
  return BlockWord(x[0], y[0], w.lengths());
}

AnyWord apply_hom(const Homomorphism& h, const AnyWord& w) {
  return std::visit(
      [&h](const auto& x) -> AnyWord {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteWord>) {
          return apply_hom(h, x);
        } else {
          return apply_hom(h, x);
        }
      },
      w);
}

// ------------------------------------------------------------- Enumeration

bool shortlex_less(std::string_view a, std::string_view b,
                   const Alphabet& alphabet) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return alphabet.index(a[i]) < alphabet.index(b[i]);
  }
  return false;
}

std::vector<FiniteWord> words_up_to(const Alphabet& alphabet,
                                    std::size_t max_length) {
  std::vector<FiniteWord> out{FiniteWord()};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Symbol s : alphabet.letters()) out.push_back(out[i] + s);
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace omegaext
