#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wordchar/schreier.hpp"

namespace wordchar {

struct SpectralOptions {
  double tolerance = 1e-8;  // accepted residual is tolerance * 2r
  /// Restart-cycle cap; each cycle is one bounded-depth Krylov sweep.
  int max_iterations = 500;
  uint64_t seed = 0;  // start-vector seed
};

struct SpectralReport {
  double lambda_top = 0;     // largest eigenvalue off the deflated space
  double lambda_bottom = 0;  // smallest
  /// max(|top|, |bottom|) after removing eigenvalues equal to +-2r; absent
  /// when nothing remains besides the trivial ones.
  std::optional<double> lambda_nontrivial;
  double residual = 0;       // worst accepted Ritz residual
  int iterations = 0;
  bool converged = false;    // partial report when false
  bool connected = true;
  bool bipartite = false;
  uint64_t seed = 0;
};

/// Extreme eigenvalues of the adjacency operator on the orthogonal
/// complement of the trivial eigenvectors: Lanczos with explicit deflation
/// of the all-ones vector (and of the bipartition sign vector when the
/// graph is bipartite) and full reorthogonalization. Refuses disconnected
/// graphs.
SpectralReport spectral_gap(const SchreierOperator& op, const SpectralOptions& opts = {});

/// Dense oracle: the full spectrum, ascending. Guarded to |V| <= 4000.
std::vector<double> dense_spectrum(const SchreierOperator& op);

}  // namespace wordchar
