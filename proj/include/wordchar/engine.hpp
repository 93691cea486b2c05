#pragma once

#include <vector>

#include "wordchar/contribution.hpp"
#include "wordchar/rational_function.hpp"
#include "wordchar/word.hpp"
#include "wordchar/young.hpp"

namespace wordchar {

struct EngineOptions {
  long partition_budget = kDefaultEnumerationBudget;  // per star enumeration
  long tuple_budget = 100'000'000;                    // junction tuples per word
  int threads = 1;
  /// Verify 2k <= -2*chi + 2*sum del on every non-contradictory graph of a
  /// non-power word; a violation aborts the run.
  bool check_euler = true;
  /// Sum over all partitions instead of the starred family. The terms that
  /// the starred family drops cancel, so the result must not change; this
  /// exists for that cross-check and is far slower.
  bool all_partitions_debug = false;
};

struct EnumerationStats {
  long family_combinations = 0;  // (sigma, tau) choices across generators
  long junction_tuples = 0;
  long graphs_built = 0;
  long contradictions = 0;
  long euler_checked = 0;
  int max_vertex_classes = 0;

  EnumerationStats& operator+=(const EnumerationStats& o);
};

struct ExpectedCharacterResult {
  RationalFunction value;  // exact rational function of n
  WordClass word_class = WordClass::kIdentity;
  ReducedWord word;  // the cyclically reduced core actually used
  EnumerationStats stats;
};

/// The expected irreducible stable character of a w-random permutation, as
/// an exact rational function of n, valid at every integer
/// n >= 2k * length(w). Identity words yield the stable dimension
/// polynomial; words with a generator occurring exactly once yield the zero
/// function; everything else (proper powers included) goes through the full
/// enumeration.
ExpectedCharacterResult expected_character(const std::vector<Letter>& word,
                                           const YoungDiagram& lambda,
                                           const EngineOptions& opts = {});

/// The raw enumeration on an already cyclically reduced word, with no
/// identity/primitivity routing and no rotation canonicalization. Test
/// surface: rotation invariance and the vanishing of undetected primitives
/// are asserted against this.
ExpectedCharacterResult expected_character_core(const ReducedWord& word,
                                                const YoungDiagram& lambda,
                                                const EngineOptions& opts = {});

struct PolynomialFormResult {
  Polynomial p;     // in x = 1/n
  Polynomial gate;  // gate_polynomial(q, k)
  int degree_bound = 0;  // 3kq + kq^2 + k
  ExpectedCharacterResult character;
};

/// Clears the expected character against the gate: E(1/x) * gate(x) must be
/// a polynomial of degree at most 3kq + kq^2 + k. Divisibility failure is
/// an invariant violation, not a recoverable error.
PolynomialFormResult polynomial_form(const std::vector<Letter>& word,
                                     const YoungDiagram& lambda, int q,
                                     const EngineOptions& opts = {});

struct PhiResult {
  RationalFunction phi;          // in x, regular at 0
  std::vector<Rat> taylor;       // first 2K Maclaurin coefficients
  int required_vanishing = 0;    // 2K generic, K proper power, 0 identity
  WordClass word_class = WordClass::kIdentity;
};

/// phi(x) = x^K * sum over lambda with K boxes of E[w, lambda](1/x).
PhiResult phi_w(const std::vector<Letter>& word, int K, const EngineOptions& opts = {});

}  // namespace wordchar
