#pragma once

#include <cstdint>
#include <vector>

#include "wordchar/word.hpp"
#include "wordchar/young.hpp"

namespace wordchar {

/// Permutation of [n], stored as 0-based images.
class Permutation {
public:
  static Permutation identity(int n);
  explicit Permutation(std::vector<int> images);

  int n() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (a * b)(x) = a(b(x)); b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  int fixed_points() const;

private:
  std::vector<int> images_;
};

CycleType cycle_type(const Permutation& p);

/// Counter-based deterministic random stream: the value sequence depends
/// only on (seed, position), never on call interleaving, so parallel
/// consumers can share a seed through disjoint positions.
class RandomStream {
public:
  RandomStream(uint64_t seed, uint64_t position);
  uint64_t next();
  /// Uniform in [0, bound), exact (rejection sampling).
  uint64_t below(uint64_t bound);
  double unit_symmetric();  // deterministic value in [-1, 1]

private:
  uint64_t state_;
};

/// Uniformly random permutation of [n], reproducible from (seed, position).
Permutation random_permutation(int n, uint64_t seed, uint64_t position);

/// Word map evaluation by substitution: the image of letter i acts after
/// the image of letter i+1 (rightmost letter applies first).
Permutation evaluate_word(const ReducedWord& w, const std::vector<Permutation>& perms);
Permutation evaluate_letters(const std::vector<Letter>& letters,
                             const std::vector<Permutation>& perms);

}  // namespace wordchar
