#include "wordchar/engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "wordchar/projection.hpp"
#include "wordchar/weingarten.hpp"

namespace wordchar {

EnumerationStats& EnumerationStats::operator+=(const EnumerationStats& o) {
  family_combinations += o.family_combinations;
  junction_tuples += o.junction_tuples;
  graphs_built += o.graphs_built;
  contradictions += o.contradictions;
  euler_checked += o.euler_checked;
  max_vertex_classes = std::max(max_vertex_classes, o.max_vertex_classes);
  return *this;
}

namespace {

// Per-junction-matching data, hoisted out of the tuple loop. The projection
// coefficient for pi is carried as a polynomial numerator over the common
// denominator (n)_{2k}: coeff_num = dim_stable * sign * chi_sum * lift,
// where lift raises (n)_{|pi|} to (n)_{2k}.
struct JunctionOption {
  PartialMatching matching;
  Polynomial coeff_num;  // zero polynomial when the character sum vanishes
};

struct Shard {
  Polynomial numerator;
  EnumerationStats stats;
  bool euler_violation = false;
  std::string euler_diagnostic;
};

void run_shard(const ReducedWord& w, int k, bool non_power, bool check_euler,
               const std::vector<std::vector<SetPartition>>& families,
               const std::vector<JunctionOption>& junction_options,
               const std::vector<Polynomial>& wg_numerators_flat, long combo_begin,
               long combo_end, Shard& out) {
  const int rank = w.rank();
  const int l = w.length();
  // combo index decodes, least significant first, to (sigma_f, tau_f) per
  // generator; wg_numerators_flat is indexed the same way per generator.
  std::vector<SetPartition> sigma_v, tau_v;
  std::vector<size_t> wg_index(static_cast<size_t>(rank));

  const size_t n_options = junction_options.size();
  std::vector<size_t> tuple(static_cast<size_t>(l), 0);
  std::vector<PartialMatching> junctions;
  std::vector<long> family_sizes(static_cast<size_t>(rank));
  std::vector<long> family_offset(static_cast<size_t>(rank));
  {
    long off = 0;
    for (int f = 0; f < rank; ++f) {
      family_sizes[static_cast<size_t>(f)] = static_cast<long>(families[static_cast<size_t>(f)].size());
      family_offset[static_cast<size_t>(f)] = off;
      off += family_sizes[static_cast<size_t>(f)] * family_sizes[static_cast<size_t>(f)];
    }
  }
  for (long combo = combo_begin; combo < combo_end; ++combo) {
    long rest = combo;
    sigma_v.clear();
    tau_v.clear();
    for (int f = 0; f < rank; ++f) {
      long fs = family_sizes[static_cast<size_t>(f)];
      long pair_idx = rest % (fs * fs);
      rest /= fs * fs;
      long si = pair_idx / fs, ti = pair_idx % fs;
      wg_index[static_cast<size_t>(f)] =
          static_cast<size_t>(family_offset[static_cast<size_t>(f)] + pair_idx);
      sigma_v.push_back(families[static_cast<size_t>(f)][static_cast<size_t>(si)]);
      tau_v.push_back(families[static_cast<size_t>(f)][static_cast<size_t>(ti)]);
    }
    ++out.stats.family_combinations;

    Polynomial wg_product(Rat(1));
    bool wg_zero = false;
    for (int f = 0; f < rank && !wg_zero; ++f) {
      const Polynomial& wgn = wg_numerators_flat[wg_index[static_cast<size_t>(f)]];
      if (wgn.is_zero()) wg_zero = true;
      else wg_product *= wgn;
    }

    // Odometer over junction matchings.
    std::fill(tuple.begin(), tuple.end(), 0);
    while (true) {
      ++out.stats.junction_tuples;
      junctions.clear();
      bool coeff_zero = wg_zero;
      for (int t = 0; t < l; ++t) {
        const auto& opt = junction_options[tuple[static_cast<size_t>(t)]];
        junctions.push_back(opt.matching);
        coeff_zero = coeff_zero || opt.coeff_num.is_zero();
      }
      ContributionGraph g = build_contribution_graph(w, k, sigma_v, tau_v, junctions);
      ++out.stats.graphs_built;
      out.stats.max_vertex_classes = std::max(out.stats.max_vertex_classes, g.vertex_classes);
      if (g.contradiction) {
        ++out.stats.contradictions;
      } else {
        if (check_euler && non_power) {
          ++out.stats.euler_checked;
          if (2 * k > -2 * g.euler_characteristic() + 2 * g.del_total) {
            out.euler_violation = true;
            std::ostringstream os;
            os << "euler bound violated: word=" << w.to_string() << " k=" << k
               << " chi=" << g.euler_characteristic() << " sum_del=" << g.del_total;
            out.euler_diagnostic = os.str();
            return;
          }
        }
        if (!coeff_zero) {
          Polynomial term = wg_product;
          for (int t = 0; t < l; ++t)
            term *= junction_options[tuple[static_cast<size_t>(t)]].coeff_num;
          term *= count_assignments(g);
          out.numerator += term;
        }
      }
      size_t t = 0;
      while (t < tuple.size() && ++tuple[t] == n_options) tuple[t++] = 0;
      if (t == tuple.size()) break;
    }
  }
}

}  // namespace

ExpectedCharacterResult expected_character_core(const ReducedWord& w,
                                                const YoungDiagram& lambda,
                                                const EngineOptions& opts) {
  const int k = static_cast<int>(lambda.size());
  if (k < 1) throw std::invalid_argument("expected_character: lambda must be nonempty");
  if (w.length() == 0 || !w.cyclically_reduced())
    throw std::invalid_argument("expected_character_core: need a nonempty cyclically reduced word");
  const int rank = w.rank();
  const int l = w.length();

  // Junction options with hoisted projection coefficients.
  std::vector<JunctionOption> junction_options;
  {
    Polynomial stable = dim_stable(lambda);
    for (const auto& pi : enumerate_submatchings(k, opts.partition_budget)) {
      Int chi_sum = 0;
      for (const auto& tau_imgs : completions(pi)) {
        std::vector<int> img(tau_imgs.size());
        for (size_t i = 0; i < tau_imgs.size(); ++i) img[i] = tau_imgs[i] - 1;
        chi_sum += character(lambda, cycle_type(Permutation(std::move(img))));
      }
      Polynomial lift(Rat(1));
      for (int c = pi.block_count(); c < 2 * k; ++c) lift *= Polynomial({Rat(-c), Rat(1)});
      Rat sign((pi.block_count() + k) % 2 == 0 ? 1 : -1);
      junction_options.push_back(
          {pi, stable.scaled(sign * Rat(chi_sum)) * lift});
    }
  }
  {
    double tuples = 1;
    for (int t = 0; t < l; ++t) tuples *= static_cast<double>(junction_options.size());
    if (tuples > static_cast<double>(opts.tuple_budget))
      throw BudgetError("expected_character: junction tuple count exceeds budget");
  }

  // Equality-partition families per generator.
  std::vector<std::vector<SetPartition>> families(static_cast<size_t>(rank));
  for (int f = 0; f < rank; ++f) {
    int occ = w.occurrences()[static_cast<size_t>(f)];
    families[static_cast<size_t>(f)] =
        opts.all_partitions_debug
            ? enumerate_partitions(occ * k, opts.partition_budget)
            : enumerate_star_partitions(occ, k, opts.partition_budget);
  }

  ExpectedCharacterResult result;
  result.word = w;
  result.word_class = WordClass::kGeneric;

  long combos = 1;
  for (int f = 0; f < rank; ++f) {
    long fs = static_cast<long>(families[static_cast<size_t>(f)].size());
    if (fs == 0) {  // empty starred family: the whole sum is empty
      result.value = RationalFunction();
      return result;
    }
    combos *= fs * fs;
  }

  // Weingarten numerators over (n)_{occ*k}, for every (sigma, tau) pair of
  // every generator, hoisted out of the combo loop.
  std::vector<Polynomial> wg_numerators_flat;
  for (int f = 0; f < rank; ++f) {
    const auto& fam = families[static_cast<size_t>(f)];
    const int m = w.occurrences()[static_cast<size_t>(f)] * k;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo;
    for (const auto& s : fam)
      for (const auto& t : fam) {
        auto key = std::make_pair(s.rgs(), t.rgs());
        if (key.second < key.first) std::swap(key.first, key.second);
        auto it = memo.find(key);
        if (it == memo.end()) {
          Polynomial numerator;
          SetPartition mt = meet(s, t);
          for (const auto& pi : enumerate_refinements(mt, opts.partition_budget)) {
            Rat mm = Rat(mobius(pi, s) * mobius(pi, t));
            Polynomial liftp(Rat(1));
            for (int c = pi.block_count(); c < m; ++c) liftp *= Polynomial({Rat(-c), Rat(1)});
            numerator += liftp.scaled(mm);
          }
          it = memo.emplace(std::move(key), std::move(numerator)).first;
        }
        wg_numerators_flat.push_back(it->second);
      }
  }

  const WordClass cls = preprocess_word(w.letters()).word_class;
  const bool non_power = cls == WordClass::kGeneric;
  result.word_class = cls;

  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(combos)));
  std::vector<Shard> shards(static_cast<size_t>(threads));
  if (threads == 1) {
    run_shard(w, k, non_power, opts.check_euler, families, junction_options,
              wg_numerators_flat, 0, combos, shards[0]);
  } else {
    std::vector<std::thread> pool;
    long per = (combos + threads - 1) / threads;
    for (int i = 0; i < threads; ++i) {
      long b = i * per, e = std::min(combos, (i + 1) * per);
      pool.emplace_back(run_shard, std::cref(w), k, non_power, opts.check_euler,
                        std::cref(families), std::cref(junction_options),
                        std::cref(wg_numerators_flat), b, e,
                        std::ref(shards[static_cast<size_t>(i)]));
    }
    for (auto& th : pool) th.join();
  }

  Polynomial numerator;
  for (const auto& s : shards) {
    if (s.euler_violation) throw InvariantViolation(s.euler_diagnostic);
    numerator += s.numerator;
    result.stats += s.stats;
  }

  // Common denominator: (n)_{2k}^{l} from the junction coefficients times
  // (n)_{occ*k} per generator from the Weingarten kernels, and the leading
  // 1/dim(lambda).
  Polynomial fall2k = falling_factorial(2 * k);
  Polynomial denominator(Rat(1));
  for (int t = 0; t < l; ++t) denominator *= fall2k;
  for (int f = 0; f < rank; ++f)
    denominator *= falling_factorial(w.occurrences()[static_cast<size_t>(f)] * k);
  result.value = RationalFunction(numerator.scaled(Rat(1) / Rat(dim(lambda))), denominator);
  return result;
}

namespace {

// Expectation values are rotation invariant (class functions of a
// conjugation-invariant law), so the engine runs on one canonical rotation:
// the lexicographically least one.
ReducedWord canonical_rotation(const ReducedWord& w) {
  ReducedWord best = w;
  for (int by = 1; by < w.length(); ++by) {
    ReducedWord cand = rotate(w, by);
    if (cand.letters() < best.letters()) best = cand;
  }
  return best;
}

}  // namespace

ExpectedCharacterResult expected_character(const std::vector<Letter>& word,
                                           const YoungDiagram& lambda,
                                           const EngineOptions& opts) {
  WordAnalysis a = preprocess_word(word);
  ExpectedCharacterResult result;
  result.word = a.word;
  result.word_class = a.word_class;
  switch (a.word_class) {
    case WordClass::kIdentity:
      result.value = RationalFunction(dim_stable(lambda));
      return result;
    case WordClass::kPrimitiveDetected:
      result.value = RationalFunction();
      return result;
    case WordClass::kProperPower:
    case WordClass::kGeneric: {
      ExpectedCharacterResult core =
          expected_character_core(canonical_rotation(a.word), lambda, opts);
      core.word_class = a.word_class;
      return core;
    }
  }
  throw std::logic_error("unreachable");
}

PolynomialFormResult polynomial_form(const std::vector<Letter>& word,
                                     const YoungDiagram& lambda, int q,
                                     const EngineOptions& opts) {
  PolynomialFormResult r;
  r.character = expected_character(word, lambda, opts);
  if (r.character.word_class == WordClass::kIdentity)
    throw std::invalid_argument("polynomial_form: identity word has no gate form");
  const int l = r.character.word.length();
  if (q < l) throw std::invalid_argument("polynomial_form: q must be >= word length");
  const int k = static_cast<int>(lambda.size());
  r.gate = gate_polynomial(q, k);
  r.degree_bound = 3 * k * q + k * q * q + k;

  RationalFunction in_x = reciprocal_substitute(r.character.value);
  auto [quot, rem] = divmod(r.gate, in_x.den());
  if (!rem.is_zero())
    throw InvariantViolation("polynomial_form: gate is not divisible by the reduced denominator");
  r.p = in_x.num() * quot;
  if (r.p.degree() > r.degree_bound)
    throw InvariantViolation("polynomial_form: degree bound exceeded");
  return r;
}

PhiResult phi_w(const std::vector<Letter>& word, int K, const EngineOptions& opts) {
  if (K < 1) throw std::invalid_argument("phi_w: K must be positive");
  PhiResult r;
  WordAnalysis a = preprocess_word(word);
  r.word_class = a.word_class;
  RationalFunction total;
  for (const auto& lambda : diagrams_of_size(K))
    total += reciprocal_substitute(expected_character(word, lambda, opts).value);
  r.phi = RationalFunction(Polynomial::monomial(K)) * total;
  switch (a.word_class) {
    case WordClass::kIdentity: r.required_vanishing = 0; break;
    case WordClass::kProperPower: r.required_vanishing = K; break;
    default: r.required_vanishing = 2 * K; break;
  }
  r.taylor = taylor_coefficients(r.phi, 2 * K);
  return r;
}

}  // namespace wordchar
