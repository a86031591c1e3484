#include "omegaext/error.hpp"

#include <cstdlib>
#include <string>

namespace omegaext {

std::size_t StepBudget::default_limit() {
  if (const char* env = std::getenv(kEnvVar)) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // Unparsable override: keep the built-in default.
    }
  }
  return kDefaultLimit;
}

}  // namespace omegaext
