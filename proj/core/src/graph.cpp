#include "graph.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace omegaext::detail {

SccResult strongly_connected(const Adjacency& adj,
                             const std::vector<std::uint8_t>& active) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = adj.size();
  auto on = [&](std::uint32_t v) { return active.empty() || active[v] != 0; };

  SccResult out;
  out.component.assign(n, kUnset);
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t next_index = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (!on(root) || index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < adj[v].size()) {
        const std::uint32_t w = adj[v][edge++];
        if (!on(w)) continue;
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] != index[done]) continue;
      const std::uint32_t id = out.count++;
      std::size_t size = 0;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        out.component[w] = id;
        ++size;
      } while (w != done);
      bool cyclic = size > 1;
      if (!cyclic) {
        cyclic = std::find(adj[done].begin(), adj[done].end(), done) !=
                 adj[done].end();
      }
      out.cyclic.push_back(cyclic ? 1 : 0);
    }
  }
  return out;
}

std::vector<std::uint8_t> reachable(const Adjacency& adj,
                                    const std::vector<std::uint32_t>& sources) {
  std::vector<std::uint8_t> seen(adj.size(), 0);
  std::vector<std::uint32_t> todo;
  for (auto s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      todo.push_back(s);
    }
  }
  while (!todo.empty()) {
    const auto v = todo.back();
    todo.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

Adjacency reverse(const Adjacency& adj) {
  Adjacency rev(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    for (auto w : adj[v]) rev[w].push_back(v);
  }
  return rev;
}

std::vector<std::uint32_t> refine_partition(
    const std::vector<std::uint32_t>& next, std::size_t k,
    const std::vector<std::uint32_t>& labels) {
  const std::size_t n = labels.size();
  auto renumber = [n](const auto& key_of) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> out(n);
    for (std::size_t q = 0; q < n; ++q) {
      auto [it, fresh] =
          ids.emplace(key_of(q), static_cast<std::uint32_t>(ids.size()));
      out[q] = it->second;
    }
    return std::make_pair(out, ids.size());
  };
  auto [block, count] =
      renumber([&](std::size_t q) { return std::vector<std::uint32_t>{labels[q]}; });
  while (true) {
    auto [refined, refined_count] = renumber([&](std::size_t q) {
      std::vector<std::uint32_t> key(k + 1);
      key[0] = block[q];
      for (std::size_t x = 0; x < k; ++x) key[x + 1] = block[next[q * k + x]];
      return key;
    });
    if (refined_count == count) return refined;
    block = std::move(refined);
    count = refined_count;
  }
}

}  // namespace omegaext::detail
