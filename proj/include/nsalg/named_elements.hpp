#pragma once

#include "nsalg/smash.hpp"

#include <optional>
#include <utility>

namespace nsalg {

/// Normal form of sum_i (-1)^i C(m,i) L_{k-i} L_{s+i}.
SmashElement omega(int k, int s, int m, SmashMode mode = SmashMode::PureU);

/// L'_n for n >= -1. At n = -1 the defining sum collapses to -L_{-1}.
SmashElement l_prime(int n, SmashMode mode = SmashMode::AK);

/// G'_{n-1/2} for n >= 0.
SmashElement g_prime(int n, SmashMode mode = SmashMode::AK);

struct ReconstructionResiduals {
  /// sum_k (-1)^k C(n+1,k+1) t^{n-k}(L'_k - (k+1)/2 xi G'_{k-1/2}) + t^{n+1} L_{-1} - L_n
  SmashElement l_residual;
  /// sum_k (-1)^k C(n,k) t^{n-k}(G'_{k-1/2} - 2 xi L'_{k-1}) - G_{n-1/2}
  SmashElement g_residual;
};

/// Rebuilds L_n and G_{n-1/2} from the primed elements and returns both
/// differences. `l_prime_minus_one` replaces L'_{-1} (for mutation tests).
ReconstructionResiduals verify_reconstruction(
    int n, const std::optional<SmashElement>& l_prime_minus_one = std::nullopt,
    SmashMode mode = SmashMode::AK);

}  // namespace nsalg
