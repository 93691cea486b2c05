#pragma once

#include <cstdint>

#include "wordchar/permutation.hpp"
#include "wordchar/word.hpp"
#include "wordchar/young.hpp"

namespace wordchar {

struct McReport {
  double mean = 0;
  double stderr_ = 0;
  long samples = 0;
  uint64_t seed = 0;
};

/// Monte Carlo estimate of the expected stable character: sample i.i.d.
/// uniform generator images, push the word map's cycle type through the
/// exact character, and average. Sample s consumes stream positions
/// s*rank .. s*rank + rank - 1 of the seed, so the estimate depends only on
/// (seed, samples). Requires n >= k + lambda_1 + 1.
McReport mc_expected_character(const ReducedWord& w, const YoungDiagram& lambda, int n,
                               long samples, uint64_t seed);

/// Exact average of the stable character over every generator tuple;
/// guarded by (n!)^rank <= 10^8.
Rat exhaustive_expected_character(const ReducedWord& w, const YoungDiagram& lambda, int n);

}  // namespace wordchar
