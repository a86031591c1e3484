#pragma once

// Internal graph helpers shared by the automaton algorithms.

#include <cstdint>
#include <vector>

namespace omegaext::detail {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct SccResult {
  std::vector<std::uint32_t> component;  // node -> component id
  std::vector<std::uint8_t> cyclic;      // component -> has an internal edge
  std::uint32_t count = 0;
};

/// Tarjan's algorithm, iterative.  Nodes with `active[v] == 0` are ignored
/// (pass an empty vector to use every node).
SccResult strongly_connected(const Adjacency& adj,
                             const std::vector<std::uint8_t>& active = {});

/// Nodes reachable from `sources`.
std::vector<std::uint8_t> reachable(const Adjacency& adj,
                                    const std::vector<std::uint32_t>& sources);

Adjacency reverse(const Adjacency& adj);

/// Coarsest partition of a complete DFA's states (`next[q * k + x]`) that
/// refines `labels` and is compatible with every letter.  Block ids are
/// numbered by first occurrence in state order.
std::vector<std::uint32_t> refine_partition(
    const std::vector<std::uint32_t>& next, std::size_t k,
    const std::vector<std::uint32_t>& labels);

}  // namespace omegaext::detail
