#include "wordchar/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace wordchar {

namespace {

// Character of the long-first-row diagram at a sampled cycle type, with a
// per-run memo (cycle types repeat heavily across samples).
struct StableCharacter {
  YoungDiagram lambda;
  long n;
  std::map<std::vector<long>, Int> memo;

  Int operator()(const CycleType& type) {
    auto it = memo.find(type.parts());
    if (it != memo.end()) return it->second;
    Int v = character(lambda.with_long_first_row(n), type);
    memo.emplace(type.parts(), v);
    return v;
  }
};

}  // namespace

McReport mc_expected_character(const ReducedWord& w, const YoungDiagram& lambda, int n,
                               long samples, uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("mc_expected_character: need samples >= 1");
  if (n < lambda.size() + lambda.part(0) + 1)
    throw std::invalid_argument("mc_expected_character: n too small for the stable diagram");
  const int rank = std::max(1, w.rank());
  StableCharacter chi{lambda, n, {}};

  // Welford accumulation; the summands themselves are exact integers.
  double mean = 0, m2 = 0;
  std::vector<Permutation> gens;
  for (long s = 0; s < samples; ++s) {
    gens.clear();
    for (int g = 0; g < rank; ++g)
      gens.push_back(random_permutation(
          n, seed, static_cast<uint64_t>(s) * static_cast<uint64_t>(rank) +
                       static_cast<uint64_t>(g)));
    Permutation image = w.length() == 0 ? Permutation::identity(n) : evaluate_word(w, gens);
    double x = mpz_get_d(chi(cycle_type(image)).get_mpz_t());
    double delta = x - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (x - mean);
  }
  McReport r;
  r.mean = mean;
  r.stderr_ = samples > 1
                  ? std::sqrt(m2 / (static_cast<double>(samples) * (static_cast<double>(samples) - 1)))
                  : 0.0;
  r.samples = samples;
  r.seed = seed;
  return r;
}

Rat exhaustive_expected_character(const ReducedWord& w, const YoungDiagram& lambda, int n) {
  if (n < lambda.size() + lambda.part(0))
    throw std::invalid_argument("exhaustive_expected_character: n too small");
  const int rank = w.rank();
  double scale = 1;
  double nf = mpz_get_d(factorial(n).get_mpz_t());
  for (int g = 0; g < rank; ++g) scale *= nf;
  if (scale > 1e8)
    throw std::domain_error("exhaustive_expected_character: (n!)^rank exceeds the oracle scale");
  if (rank == 0) return Rat(character(lambda.with_long_first_row(n),
                                      CycleType(std::vector<long>(static_cast<size_t>(n), 1))));

  std::vector<Permutation> all;
  {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
      all.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  StableCharacter chi{lambda, n, {}};

  Int total = 0;
  std::vector<size_t> odo(static_cast<size_t>(rank), 0);
  std::vector<Permutation> gens;
  while (true) {
    gens.clear();
    for (int g = 0; g < rank; ++g) gens.push_back(all[odo[static_cast<size_t>(g)]]);
    total += chi(cycle_type(evaluate_word(w, gens)));
    size_t i = 0;
    while (i < odo.size() && ++odo[i] == all.size()) odo[i++] = 0;
    if (i == odo.size()) break;
  }
  Int tuples = 1;
  for (int g = 0; g < rank; ++g) tuples *= factorial(n);
  return Rat(total) / Rat(tuples);
}

}  // namespace wordchar
