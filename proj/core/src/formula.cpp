#include "omegaext/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "omegaext/error.hpp"

namespace omegaext {
namespace {

using Kind = Formula::Kind;

std::string sort_name(Sort s) { return s == Sort::kPosition ? "position" : "set"; }

// Sorts each atom expects of its variables.
std::vector<std::pair<std::string, Sort>> uses(const Formula& f) {
  switch (f.kind()) {
    case Kind::kLess:
      return {{f.vars()[0], Sort::kPosition}, {f.vars()[1], Sort::kPosition}};
    case Kind::kIn:
      return {{f.vars()[0], Sort::kPosition}, {f.vars()[1], Sort::kSet}};
    case Kind::kLetter:
      return {{f.vars()[0], Sort::kPosition}};
    case Kind::kLanguage: {
      std::vector<std::pair<std::string, Sort>> out;
      for (const auto& v : f.vars()) out.emplace_back(v, Sort::kSet);
      return out;
    }
    default:
      return {};
  }
}

struct ScopeWalk {
  const std::map<std::string, std::size_t>* arities = nullptr;
  std::map<std::string, Sort> bound;
  std::map<std::string, Sort> free;
  std::vector<std::string> errors;

  void visit(const Formula& f) {
    for (const auto& [v, s] : uses(f)) {
      auto it = bound.find(v);
      if (it != bound.end()) {
        if (it->second != s) {
          errors.push_back("variable " + v + " is bound as a " +
                           sort_name(it->second) + " but used as a " + sort_name(s));
        }
        continue;
      }
      auto [fit, fresh] = free.emplace(v, s);
      if (!fresh && fit->second != s) {
        errors.push_back("free variable " + v + " is used with both sorts");
      }
    }
    if (f.kind() == Kind::kLanguage && arities != nullptr) {
      auto it = arities->find(f.name());
      if (it == arities->end()) {
        errors.push_back("unknown language predicate " + f.name());
      } else if (it->second != f.vars().size()) {
        errors.push_back("predicate " + f.name() + " takes " +
                         std::to_string(it->second) + " sets, not " +
                         std::to_string(f.vars().size()));
      }
    }
    if (f.is_quantifier()) {
      const auto& v = f.vars()[0];
      if (bound.count(v)) errors.push_back("variable " + v + " is bound twice along a path");
      const auto saved = bound.find(v) == bound.end()
                             ? std::optional<Sort>{}
                             : std::optional<Sort>{bound[v]};
      bound[v] = f.sort();
      visit(f.children()[0]);
      if (saved) {
        bound[v] = *saved;
      } else {
        bound.erase(v);
      }
      return;
    }
    for (const auto& c : f.children()) visit(c);
  }
};

// ------------------------------------------------------------------ Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text after the formula");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formula, offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek_close() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ')';
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      ++pos_;
    }
    if (start == pos_) fail("expected a token");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t at = pos_;
    std::string t = token();
    const auto ok_first = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    const auto ok_rest = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    };
    if (!ok_first(t[0]) || !std::all_of(t.begin() + 1, t.end(), ok_rest)) {
      pos_ = at;
      fail("bad identifier '" + t + "'");
    }
    return t;
  }

  Formula parse() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != '(') {
      const std::string t = token();
      if (t == "true") return Formula::truth(true);
      if (t == "false") return Formula::truth(false);
      fail("expected '(' , true or false, got '" + t + "'");
    }
    expect('(');
    const std::string op = token();
    Formula out = Formula::truth(true);
    if (op == "<") {
      auto x = identifier();
      out = Formula::less(x, identifier());
    } else if (op == "in") {
      auto x = identifier();
      out = Formula::in(x, identifier());
    } else if (op == "letter") {
      auto x = identifier();
      const std::string a = token();
      if (a.size() != 1) fail("letter must be a single character");
      out = Formula::letter(x, a[0]);
    } else if (op == "L") {
      auto name = token();
      std::vector<std::string> sets;
      while (!peek_close()) sets.push_back(identifier());
      out = Formula::language(name, sets);
    } else if (op == "not") {
      out = Formula::negate(parse());
    } else if (op == "and" || op == "or") {
      std::vector<Formula> fs;
      while (!peek_close()) fs.push_back(parse());
      out = op == "and" ? Formula::conj(fs) : Formula::disj(fs);
    } else if (op == "implies" || op == "iff") {
      auto f = parse();
      auto g = parse();
      out = op == "implies" ? Formula::implies(f, g) : Formula::iff(f, g);
    } else if (op == "exists" || op == "forall") {
      auto v = identifier();
      const auto s = token();
      if (s != "pos" && s != "set") fail("expected sort pos or set, got '" + s + "'");
      const Sort sort = s == "pos" ? Sort::kPosition : Sort::kSet;
      auto body = parse();
      out = op == "exists" ? Formula::exists(v, sort, body)
                           : Formula::forall(v, sort, body);
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string pretty(const Formula& f) {
  const auto& c = f.children();
  auto join = [&](const std::string& op) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += (i ? " " + op + " " : "") + pretty(c[i]);
    }
    return out + ")";
  };
  switch (f.kind()) {
    case Kind::kTrue: return "⊤";
    case Kind::kFalse: return "⊥";
    case Kind::kLess: return f.vars()[0] + " < " + f.vars()[1];
    case Kind::kIn: return f.vars()[0] + " ∈ " + f.vars()[1];
    case Kind::kLetter: return std::string(1, f.letter_value()) + "(" + f.vars()[0] + ")";
    case Kind::kLanguage: {
      std::string out = f.name() + "(";
      for (std::size_t i = 0; i < f.vars().size(); ++i) {
        out += (i ? ", " : "") + f.vars()[i];
      }
      return out + ")";
    }
    case Kind::kNot: return "¬" + pretty(c[0]);
    case Kind::kAnd: return join("∧");
    case Kind::kOr: return join("∨");
    case Kind::kImplies: return join("⇒");
    case Kind::kIff: return join("⇔");
    case Kind::kExists: return "∃" + f.vars()[0] + ". " + pretty(c[0]);
    case Kind::kForall: return "∀" + f.vars()[0] + ". " + pretty(c[0]);
  }
  return "";
}

void format_into(const Formula& f, std::string& out) {
  auto children = [&]() {
    for (const auto& c : f.children()) {
      out += ' ';
      format_into(c, out);
    }
  };
  switch (f.kind()) {
    case Kind::kTrue: out += "true"; return;
    case Kind::kFalse: out += "false"; return;
    case Kind::kLess: out += "(< " + f.vars()[0] + " " + f.vars()[1] + ")"; return;
    case Kind::kIn: out += "(in " + f.vars()[0] + " " + f.vars()[1] + ")"; return;
    case Kind::kLetter:
      out += "(letter " + f.vars()[0] + " " + std::string(1, f.letter_value()) + ")";
      return;
    case Kind::kLanguage:
      out += "(L " + f.name();
      for (const auto& v : f.vars()) out += " " + v;
      out += ")";
      return;
    case Kind::kNot: out += "(not"; break;
    case Kind::kAnd: out += "(and"; break;
    case Kind::kOr: out += "(or"; break;
    case Kind::kImplies: out += "(implies"; break;
    case Kind::kIff: out += "(iff"; break;
    case Kind::kExists:
    case Kind::kForall:
      out += std::string(f.kind() == Kind::kExists ? "(exists " : "(forall ") +
             f.vars()[0] + (f.sort() == Sort::kPosition ? " pos" : " set");
      break;
  }
  children();
  out += ")";
}

}  // namespace

Formula Formula::truth(bool value) { return Formula(Node{value ? Kind::kTrue : Kind::kFalse}); }
Formula Formula::less(std::string x, std::string y) {
  return Formula(Node{Kind::kLess, {std::move(x), std::move(y)}});
}
Formula Formula::in(std::string x, std::string set) {
  return Formula(Node{Kind::kIn, {std::move(x), std::move(set)}});
}
Formula Formula::letter(std::string x, Symbol a) {
  return Formula(Node{Kind::kLetter, {std::move(x)}, a});
}
Formula Formula::language(std::string name, std::vector<std::string> sets) {
  if (sets.empty()) throw InvalidArgument("language atom needs at least one set");
  return Formula(Node{Kind::kLanguage, std::move(sets), 0, std::move(name)});
}
Formula Formula::negate(Formula f) { return Formula(Node{Kind::kNot, {}, 0, {}, {}, {std::move(f)}}); }
Formula Formula::conj(std::vector<Formula> fs) {
  return Formula(Node{Kind::kAnd, {}, 0, {}, {}, std::move(fs)});
}
Formula Formula::disj(std::vector<Formula> fs) {
  return Formula(Node{Kind::kOr, {}, 0, {}, {}, std::move(fs)});
}
Formula Formula::implies(Formula f, Formula g) {
  return Formula(Node{Kind::kImplies, {}, 0, {}, {}, {std::move(f), std::move(g)}});
}
Formula Formula::iff(Formula f, Formula g) {
  return Formula(Node{Kind::kIff, {}, 0, {}, {}, {std::move(f), std::move(g)}});
}
Formula Formula::exists(std::string var, Sort sort, Formula body) {
  return Formula(Node{Kind::kExists, {std::move(var)}, 0, {}, sort, {std::move(body)}});
}
Formula Formula::forall(std::string var, Sort sort, Formula body) {
  return Formula(Node{Kind::kForall, {std::move(var)}, 0, {}, sort, {std::move(body)}});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.vars() == b.vars() &&
         a.letter_value() == b.letter_value() && a.name() == b.name() &&
         (!a.is_quantifier() || a.sort() == b.sort()) && a.children() == b.children();
}

std::vector<FreeVariable> free_variables(const Formula& f) {
  ScopeWalk walk;
  walk.visit(f);
  for (const auto& e : walk.errors) {
    if (e.rfind("free variable", 0) == 0) throw InvalidArgument(e);
  }
  std::vector<FreeVariable> out;
  for (const auto& [name, sort] : walk.free) out.push_back({name, sort});
  return out;
}

std::vector<std::string> scope_errors(const Formula& f,
                                      const std::map<std::string, std::size_t>* arities) {
  ScopeWalk walk;
  walk.arities = arities;
  walk.visit(f);
  return walk.errors;
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& c : f.children()) n += formula_size(c);
  return n;
}

std::size_t formula_depth(const Formula& f) {
  std::size_t d = 0;
  for (const auto& c : f.children()) d = std::max(d, formula_depth(c));
  return d + 1;
}

std::size_t count_language_atoms(const Formula& f) {
  std::size_t n = f.kind() == Kind::kLanguage ? 1 : 0;
  for (const auto& c : f.children()) n += count_language_atoms(c);
  return n;
}

std::size_t position_quantifier_rank(const Formula& f) {
  std::size_t r = 0;
  for (const auto& c : f.children()) r = std::max(r, position_quantifier_rank(c));
  return r + (f.is_quantifier() && f.sort() == Sort::kPosition ? 1 : 0);
}

bool has_set_quantifier(const Formula& f) {
  if (f.is_quantifier() && f.sort() == Sort::kSet) return true;
  return std::any_of(f.children().begin(), f.children().end(), has_set_quantifier);
}

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

std::string format_formula(const Formula& f) {
  std::string out;
  format_into(f, out);
  return out;
}

std::string pretty_formula(const Formula& f) { return pretty(f); }

}  // namespace omegaext
