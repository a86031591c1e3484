#pragma once

// Reference implementations used only by tests.  Each one takes a different
// route from the library code it checks.

#include <string>

#include "omegaext/buchi.hpp"
#include "omegaext/words.hpp"

namespace omegaext::testing {

/// Lasso membership by iterating the period relation: read the prefix as a
/// state set, summarise one pass over the period as a relation with an
/// "accepting visited" flag, then look for a reachable state that returns to
/// itself through a flagged path in the transitive closure.
bool brute_accepts(const BuchiAutomaton& a, const UPWord& w);

/// Naive letter-by-letter comparison up to a generous horizon.
bool brute_up_equal(const UPWord& x, const UPWord& y);

}  // namespace omegaext::testing
