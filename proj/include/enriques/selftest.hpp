/* Apache License, Version 2.0 */

#pragma once

#include <vector>

#include "enriques/degeneration.hpp"

namespace enriques {

/* Frozen (-1)-class counts on P(n), n = 0..8. */
inline constexpr int kMinusOneCensus[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};

/* Gram relations, restriction isometry and the (-1)-class census. */
std::vector<CheckItem> run_selftest();

}  // namespace enriques
