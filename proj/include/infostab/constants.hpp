#pragma once

#include "infostab/alpha.hpp"

namespace infostab {

/// Stability constant K(alpha) of the open-domain bound, by class:
///   alpha < 0 : (8 + 6*2^a + 2^-a) / |2^(1-a) - 1|
///   alpha = 0 : 63
///   alpha > 0 : (3 + 12*2^a + 32*3^(a+1)/|2^-a - 1|) / |2^(1-a) - 1|
double k_alpha(const Alpha& alpha);

/// T(alpha) = 3*2^a + 8*3^(a+1)/|2^-a - 1|, defined for positive alpha != 1.
/// Enters the closed-domain bound max{K(alpha), T(alpha) + 1}.
double t_alpha(const Alpha& alpha);

}  // namespace infostab
