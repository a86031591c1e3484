#include "omegaext/monoid.hpp"

#include <deque>

#include "omegaext/error.hpp"

namespace omegaext {
namespace {

std::string key_of(const std::vector<std::uint64_t>& m) {
  return std::string(reinterpret_cast<const char*>(m.data()),
                     m.size() * sizeof(std::uint64_t));
}

bool test_bit(const std::uint64_t* row, std::size_t i) {
  return (row[i / 64] >> (i % 64)) & 1u;
}

}  // namespace

TransitionMonoid::TransitionMonoid(const BuchiAutomaton& a,
                                   std::size_t max_elements)
    : alphabet_(a.alphabet()),
      n_(a.num_states()),
      words_(n_ == 0 ? 1 : (n_ + 63) / 64) {
  const std::size_t k = alphabet_.size();
  const std::size_t block = 2 * n_ * words_;

  auto add = [&](const std::vector<Row>& m, FiniteWord w) -> Element {
    const auto key = key_of(m);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    if (witnesses_.size() >= max_elements) {
      throw BudgetExceeded("transition monoid", max_elements);
    }
    const auto id = static_cast<Element>(witnesses_.size());
    index_.emplace(key, id);
    data_.insert(data_.end(), m.begin(), m.end());
    witnesses_.push_back(std::move(w));
    nonempty_.push_back(0);
    return id;
  };

  std::vector<Row> identity(block, 0);
  for (State p = 0; p < n_; ++p) identity[p * words_ + p / 64] |= Row{1} << (p % 64);
  add(identity, "");

  std::vector<std::vector<Row>> letters(k, std::vector<Row>(block, 0));
  for (std::size_t x = 0; x < k; ++x) {
    for (State p = 0; p < n_; ++p) {
      for (State q : a.successors(p, x)) {
        letters[x][p * words_ + q / 64] |= Row{1} << (q % 64);
        if (a.is_accepting(q)) {
          letters[x][(n_ + p) * words_ + q / 64] |= Row{1} << (q % 64);
        }
      }
    }
  }

  std::deque<Element> todo{kIdentity};
  while (!todo.empty()) {
    const Element e = todo.front();
    todo.pop_front();
    for (std::size_t x = 0; x < k; ++x) {
      const auto before = witnesses_.size();
      auto m = product(data_.data() + e * block, letters[x].data());
      const Element f = add(m, witnesses_[e] + alphabet_[x]);
      if (witnesses_.size() > before) todo.push_back(f);
      if (!nonempty_[f]) {
        nonempty_[f] = 1;
        if (f == kIdentity) identity_nonempty_witness_ = witnesses_[e] + alphabet_[x];
      }
      if (table_.size() < (static_cast<std::size_t>(e) + 1) * k) {
        table_.resize((static_cast<std::size_t>(e) + 1) * k);
      }
      table_[static_cast<std::size_t>(e) * k + x] = f;
    }
  }
  table_.resize(witnesses_.size() * k);
}

const FiniteWord& TransitionMonoid::nonempty_witness(Element e) const {
  if (!reached_by_nonempty(e)) {
    throw InvalidArgument("monoid element has no nonempty word");
  }
  return e == kIdentity ? identity_nonempty_witness_ : witnesses_[e];
}

std::vector<TransitionMonoid::Row> TransitionMonoid::product(const Row* x,
                                                             const Row* y) const {
  std::vector<Row> out(2 * n_ * words_, 0);
  for (State p = 0; p < n_; ++p) {
    Row* reach = out.data() + p * words_;
    Row* acc = out.data() + (n_ + p) * words_;
    const Row* xr = x + p * words_;
    const Row* xa = x + (n_ + p) * words_;
    for (State k = 0; k < n_; ++k) {
      const bool r = test_bit(xr, k);
      if (!r) continue;
      const Row* yr = y + k * words_;
      const Row* ya = y + (n_ + k) * words_;
      const bool via_acc = test_bit(xa, k);
      for (std::size_t w = 0; w < words_; ++w) {
        reach[w] |= yr[w];
        acc[w] |= ya[w];
        if (via_acc) acc[w] |= yr[w];
      }
    }
  }
  return out;
}

TransitionMonoid::Element TransitionMonoid::lookup(
    const std::vector<Row>& m) const {
  auto it = index_.find(key_of(m));
  if (it == index_.end()) {
    throw InvalidArgument("product is not an element of this monoid");
  }
  return it->second;
}

TransitionMonoid::Element TransitionMonoid::of_word(std::string_view w) const {
  Element e = kIdentity;
  for (Symbol s : w) e = step(e, alphabet_.index(s));
  return e;
}

TransitionMonoid::Element TransitionMonoid::multiply(Element x,
                                                     Element y) const {
  const std::size_t block = 2 * n_ * words_;
  return lookup(product(data_.data() + x * block, data_.data() + y * block));
}

bool TransitionMonoid::path(Element e, State p, State q) const {
  return test_bit(reach_row(e, p), q);
}

bool TransitionMonoid::accepting_path(Element e, State p, State q) const {
  return test_bit(acc_row(e, p), q);
}

std::vector<std::uint8_t> TransitionMonoid::image(
    Element e, const std::vector<std::uint8_t>& from) const {
  std::vector<std::uint8_t> out(n_, 0);
  for (State p = 0; p < n_; ++p) {
    if (!from[p]) continue;
    const Row* r = reach_row(e, p);
    for (State q = 0; q < n_; ++q) {
      if (test_bit(r, q)) out[q] = 1;
    }
  }
  return out;
}

std::vector<std::uint8_t> TransitionMonoid::accepting_loops(Element e) const {
  std::vector<std::uint8_t> out(n_, 0);
  for (State q = 0; q < n_; ++q) out[q] = accepting_path(e, q, q) ? 1 : 0;
  return out;
}

}  // namespace omegaext
