#include "omegaext/text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "omegaext/error.hpp"

namespace omegaext {
namespace {

constexpr std::string_view kReserved = "()^,;|";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected " + std::string(what) + ", got '" +
                     std::string(tok) + "'");
  }
  return value;
}

std::vector<std::uint64_t> parse_lengths(std::string_view s) {
  std::vector<std::uint64_t> out;
  for (auto tok : split_ws(s)) {
    out.push_back(parse_number<std::uint64_t>(tok, "block length"));
  }
  return out;
}

std::string join_lengths(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

bool is_letter_char(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  if (u < 0x21 || u > 0x7e) return false;
  return kReserved.find(c) == std::string_view::npos;
}

FiniteWord parse_finite_word(std::string_view text) {
  text = trim(text);
  if (text == kEpsilon) return {};
  for (char c : text) {
    if (!is_letter_char(c)) {
      throw ParseError("invalid letter '" + std::string(1, c) +
                       "' in finite word '" + std::string(text) + "'");
    }
  }
  return FiniteWord(text);
}

UPWord parse_up_word(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  constexpr std::string_view kClose = ")^w";
  if (open == std::string_view::npos || text.size() < kClose.size() ||
      text.substr(text.size() - kClose.size()) != kClose) {
    throw ParseError("expected a lasso word of the form prefix(period)^w, got '" +
                     std::string(text) + "'");
  }
  const auto prefix = parse_finite_word(text.substr(0, open));
  const auto body =
      text.substr(open + 1, text.size() - kClose.size() - open - 1);
  if (body.find('(') != std::string_view::npos) {
    throw ParseError("nested parentheses in lasso word '" + std::string(text) +
                     "'");
  }
  const auto period = parse_finite_word(body);
  if (period.empty()) {
    throw ParseError("lasso word period must be nonempty in '" +
                     std::string(text) + "'");
  }
  return UPWord(prefix, period);
}

BlockWord parse_block_word(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHead = "blocks(";
  if (text.substr(0, kHead.size()) != kHead || text.back() != ')') {
    throw ParseError("expected blocks(x,y;...), got '" + std::string(text) + "'");
  }
  const auto inner = text.substr(kHead.size(), text.size() - kHead.size() - 1);
  const auto semi = inner.find(';');
  if (semi == std::string_view::npos) {
    throw ParseError("block word needs ';' between letters and lengths");
  }
  const auto letters = trim(inner.substr(0, semi));
  if (letters.size() != 3 || letters[1] != ',' || !is_letter_char(letters[0]) ||
      !is_letter_char(letters[2])) {
    throw ParseError("block word letters must be written x,y; got '" +
                     std::string(letters) + "'");
  }
  const auto spec = trim(inner.substr(semi + 1));
  const auto toks = split_ws(spec);
  if (toks.empty()) throw ParseError("block word has no length sequence");
  BlockLengths lengths;
  if (toks[0] == "constant") {
    if (toks.size() != 2) throw ParseError("constant takes one length");
    lengths = ConstantLengths{parse_number<std::uint64_t>(toks[1], "length")};
  } else if (toks[0] == "affine") {
    if (toks.size() != 3) throw ParseError("affine takes slope and offset");
    lengths = AffineLengths{parse_number<std::uint64_t>(toks[1], "slope"),
                            parse_number<std::int64_t>(toks[2], "offset")};
  } else if (toks[0] == "periodic") {
    const auto rest = spec.substr(std::string_view("periodic").size());
    const auto bar = rest.find('|');
    if (bar == std::string_view::npos) {
      throw ParseError("periodic lengths need 'head | cycle'");
    }
    lengths = EventuallyPeriodicLengths{parse_lengths(rest.substr(0, bar)),
                                        parse_lengths(rest.substr(bar + 1))};
  } else {
    throw ParseError("unknown block length kind '" + std::string(toks[0]) + "'");
  }
  try {
    return BlockWord(letters[0], letters[2], std::move(lengths));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

OmegaWord parse_omega_word(std::string_view text) {
  text = trim(text);
  if (text.rfind("blocks(", 0) == 0) return parse_block_word(text);
  return parse_up_word(text);
}

AnyWord parse_any_word(std::string_view text) {
  text = trim(text);
  if (text.rfind("blocks(", 0) == 0) return parse_block_word(text);
  if (text.find('(') != std::string_view::npos) return parse_up_word(text);
  return parse_finite_word(text);
}

std::string format_word(const FiniteWord& w) {
  if (w.empty()) return std::string(kEpsilon);
  return w;
}

std::string format_word(const UPWord& w) {
  return w.prefix() + "(" + w.period() + ")^w";
}

std::string format_word(const BlockWord& w) {
  std::ostringstream os;
  os << "blocks(" << w.block_letter() << ',' << w.separator_letter() << ';';
  std::visit(
      [&os](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLengths>) {
          os << "constant " << l.value;
        } else if constexpr (std::is_same_v<T, AffineLengths>) {
          os << "affine " << l.slope << ' ' << l.offset;
        } else {
          os << "periodic";
          if (!l.head.empty()) os << ' ' << join_lengths(l.head);
          os << " | " << join_lengths(l.cycle);
        }
      },
      w.lengths());
  os << ')';
  return os.str();
}

std::string format_word(const OmegaWord& w) {
  return std::visit([](const auto& x) { return format_word(x); }, w);
}

std::string format_word(const AnyWord& w) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteWord>) {
          return format_word(x);
        } else {
          return format_word(x);
        }
      },
      w);
}

}  // namespace omegaext
