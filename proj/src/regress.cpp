#include "wordchar/regress.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>

#include "wordchar/engine.hpp"
#include "wordchar/lanczos.hpp"
#include "wordchar/projection.hpp"
#include "wordchar/sampling.hpp"
#include "wordchar/weingarten.hpp"

namespace wordchar {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
  void note(const std::string& what) {
    detail << (detail.str().empty() ? "" : "; ") << what;
  }
};

std::vector<YoungDiagram> small_diagrams() {
  auto out = diagrams_of_size(1);
  for (const auto& d : diagrams_of_size(2)) out.push_back(d);
  return out;
}

const char* kCommutator = "abAB";
const std::vector<std::string> kNonPowerWords = {"abAB", "aabb", "abaB"};

RationalFunction one_over(const Polynomial& p) {
  return RationalFunction(Polynomial(Rat(1)), p);
}

// 1. Commutator expectation equals the reciprocal stable dimension,
//    symbolically and against the exhaustive oracle.
void criterion_commutator(Check& c) {
  for (const auto& lambda : small_diagrams()) {
    auto r = expected_character(parse_word(kCommutator), lambda);
    c.require(r.value == one_over(dim_stable(lambda)),
              "symbolic mismatch at lambda=" + lambda.to_string());
    for (int n : {4, 5}) {
      Rat oracle = exhaustive_expected_character(r.word, lambda, n);
      c.require(r.value.evaluate(Rat(n)) == oracle,
                "exhaustive mismatch at lambda=" + lambda.to_string() +
                    " n=" + std::to_string(n));
    }
  }
}

// 2. The square of a generator has constant expectation 1 on the standard
//    block.
void criterion_square(Check& c) {
  YoungDiagram box({1});
  auto r = expected_character(parse_word("aa"), box);
  c.require(r.word_class == WordClass::kProperPower, "aa not classified as a power");
  c.require(r.value == RationalFunction(Rat(1)), "value is not the constant 1");
  for (int n : {3, 4})
    c.require(exhaustive_expected_character(r.word, box, n) == 1,
              "exhaustive mismatch at n=" + std::to_string(n));
}

// 3. Non-powers decay at least like n^{-k}.
void criterion_decay(Check& c) {
  for (const auto& word : kNonPowerWords)
    for (const auto& lambda : small_diagrams()) {
      auto r = expected_character(parse_word(word), lambda);
      int k = static_cast<int>(lambda.size());
      c.require(r.value.degree_gap() >= k,
                word + " lambda=" + lambda.to_string() + " gap=" +
                    std::to_string(r.value.degree_gap()));
    }
}

// 4. The Weingarten kernel reproduces exhaustive matrix-entry integrals and
//    obeys the meet-order bound.
void criterion_weingarten(Check& c) {
  for (int m = 1; m <= 3; ++m) {
    auto parts = enumerate_partitions(m);
    for (int n : {5, 6}) {
      std::vector<Rat> wg_at_n;
      for (const auto& s : parts)
        for (const auto& t : parts) wg_at_n.push_back(weingarten(s, t).evaluate(Rat(n)));
      // count[g(J) = I] over all permutations at once
      std::vector<int> idx(static_cast<size_t>(m), 1);
      bool done = false;
      while (!done) {
        const std::vector<int>& J = idx;
        std::vector<int> idx2(static_cast<size_t>(m), 1);
        bool done2 = false;
        while (!done2) {
          const std::vector<int>& I = idx2;
          Rat rhs(0);
          size_t w = 0;
          for (const auto& s : parts)
            for (const auto& t : parts) {
              if (delta(s, J) && delta(t, I)) rhs += wg_at_n[w];
              ++w;
            }
          if (brute_force_integral(I, J, n) != rhs) {
            c.require(false, "expansion mismatch at m=" + std::to_string(m) +
                                 " n=" + std::to_string(n));
            return;
          }
          size_t p = 0;
          while (p < idx2.size() && ++idx2[p] > n) idx2[p++] = 1;
          done2 = p == idx2.size();
        }
        size_t p = 0;
        while (p < idx.size() && ++idx[p] > n) idx[p++] = 1;
        done = p == idx.size();
      }
    }
  }
  for (int m = 1; m <= 4; ++m) {
    auto parts = enumerate_partitions(m);
    for (const auto& s : parts)
      for (const auto& t : parts) {
        RationalFunction wg = weingarten(s, t);
        c.require(wg.degree_gap() >= meet(s, t).block_count(),
                  "order bound fails at m=" + std::to_string(m));
        c.require(wg == weingarten(t, s), "symmetry fails at m=" + std::to_string(m));
      }
  }
}

// 5. Projection suite at n = 6 for one and two boxes.
void criterion_projection(Check& c) {
  const int n = 6;
  for (const auto& lambda : small_diagrams()) {
    const int k = static_cast<int>(lambda.size());
    RatMatrix q = build_projection(lambda, n);
    c.require(q * q == q, "not idempotent at lambda=" + lambda.to_string());
    c.require(q.symmetric(), "not symmetric at lambda=" + lambda.to_string());
    c.require(q.trace() == Rat(dim(lambda)) * dim_stable(lambda).evaluate(Rat(n)),
              "trace mismatch at lambda=" + lambda.to_string());

    // commutation with a transposition and the long cycle
    std::vector<Permutation> gens;
    {
      std::vector<int> tr(n);
      for (int i = 0; i < n; ++i) tr[static_cast<size_t>(i)] = i;
      std::swap(tr[0], tr[1]);
      gens.emplace_back(tr);
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % n;
      gens.emplace_back(cyc);
    }
    const long dimension = [&] {
      long d = 1;
      for (int i = 0; i < k; ++i) d *= n;
      return d;
    }();
    for (const auto& g : gens) {
      RatMatrix pg(static_cast<int>(dimension));
      for (long col = 0; col < dimension; ++col) {
        long row = 0, rest = col;
        std::vector<int> digits(static_cast<size_t>(k));
        for (int i = k - 1; i >= 0; --i) {
          digits[static_cast<size_t>(i)] = static_cast<int>(rest % n);
          rest /= n;
        }
        for (int i = 0; i < k; ++i) row = row * n + g.apply(digits[static_cast<size_t>(i)]);
        pg.at(static_cast<int>(row), static_cast<int>(col)) = Rat(1);
      }
      c.require(pg * q == q * pg, "commutation fails at lambda=" + lambda.to_string());
    }

    for (int trial = 0; trial < 20; ++trial) {
      Permutation g = random_permutation(n, 2024, static_cast<uint64_t>(trial));
      Rat via_projection = bitrace_character(lambda, g, n);
      Rat via_recursion(character(lambda.with_long_first_row(n), cycle_type(g)));
      c.require(via_projection == via_recursion,
                "bitrace mismatch at lambda=" + lambda.to_string());
    }
    c.require(xi_projector_check(lambda, n), "xi check fails at lambda=" + lambda.to_string());
  }
}

// 6. Gate divisibility and the degree bound, q = word length.
void criterion_polynomial_form(Check& c) {
  for (const auto& word : {std::string("abAB"), std::string("aa"), std::string("aabb"),
                           std::string("abaB")}) {
    auto analysis = preprocess_word(parse_word(word));
    int q = analysis.word.length();
    for (const auto& lambda : small_diagrams()) {
      auto pf = polynomial_form(parse_word(word), lambda, q);
      const int k = static_cast<int>(lambda.size());
      c.require(pf.degree_bound == 3 * k * q + k * q * q + k, "bound wired wrong");
      c.require(pf.p.degree() <= pf.degree_bound,
                word + ": degree " + std::to_string(pf.p.degree()) + " exceeds bound");
      c.require(RationalFunction(pf.p, pf.gate) == reciprocal_substitute(pf.character.value),
                word + ": gate form does not reproduce the expectation");
      c.note(word + "/" + lambda.to_string() + " deg(P)=" + std::to_string(pf.p.degree()) +
             " bound=" + std::to_string(pf.degree_bound));
    }
  }
}

// 7. Leading Maclaurin coefficients of phi vanish.
void criterion_taylor(Check& c) {
  for (int K : {1, 2}) {
    auto r = phi_w(parse_word(kCommutator), K);
    c.require(r.required_vanishing == 2 * K, "commutator vanishing count");
    for (int i = 0; i < 2 * K; ++i)
      c.require(r.taylor[static_cast<size_t>(i)] == 0,
                "commutator K=" + std::to_string(K) + " coefficient " + std::to_string(i));
  }
  auto r = phi_w(parse_word("aa"), 1);
  c.require(r.required_vanishing == 1, "power vanishing count");
  c.require(r.taylor[0] == 0, "power first coefficient");
}

// 8. The Euler-characteristic bound holds on every non-contradictory graph
//    (the engine aborts on violation; this re-runs the enumerations and
//    confirms graphs were actually checked).
void criterion_euler(Check& c) {
  for (const auto& word : kNonPowerWords)
    for (const auto& lambda : small_diagrams()) {
      EngineOptions opts;
      opts.check_euler = true;
      auto r = expected_character(parse_word(word), lambda, opts);
      c.require(r.stats.euler_checked > 0, word + ": no graphs checked");
      c.require(r.stats.euler_checked + r.stats.contradictions == r.stats.graphs_built,
                word + ": graph accounting off");
    }
}

// 9. Monte Carlo agreement for the commutator at n = 50.
void criterion_monte_carlo(Check& c) {
  auto analysis = preprocess_word(parse_word(kCommutator));
  McReport r = mc_expected_character(analysis.word, YoungDiagram({1}), 50, 200'000, 424242);
  double target = 1.0 / 49.0;
  c.note("mean=" + std::to_string(r.mean) + " stderr=" + std::to_string(r.stderr_));
  c.require(std::abs(r.mean - target) <= 4 * r.stderr_, "mean more than 4 sigma from 1/49");
}

// 10. Spectral-gap experiment and dense-oracle agreement.
void criterion_spectral(Check& c) {
  const int r = 2, k = 2, n = 300;
  const double bound = 2 * std::sqrt(3.0) + 0.25;
  const double floor = 2 * std::sqrt(3.0) - 0.5;
  int within = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    // A disconnected draw is reported and deterministically resampled from
    // later stream positions of the same seed.
    std::unique_ptr<SchreierOperator> op;
    for (uint64_t attempt = 0; attempt < 16; ++attempt) {
      std::vector<Permutation> gens;
      for (int g = 0; g < r; ++g)
        gens.push_back(random_permutation(
            n, seed, attempt * static_cast<uint64_t>(r) + static_cast<uint64_t>(g)));
      op = std::make_unique<SchreierOperator>(n, k, gens);
      if (op->connected()) break;
      c.note("seed " + std::to_string(seed) + " draw " + std::to_string(attempt) +
             " disconnected, resampled");
      op.reset();
    }
    if (!op) {
      c.require(false, "seed " + std::to_string(seed) + ": no connected draw");
      continue;
    }
    SpectralOptions so;
    so.seed = seed;
    so.tolerance = 1e-8 / (2.0 * r);  // absolute 1e-8 on every eigenpair
    SpectralReport rep = spectral_gap(*op, so);
    c.require(rep.converged, "seed " + std::to_string(seed) + " did not converge");
    c.require(rep.residual <= 1e-8,
              "seed " + std::to_string(seed) + " residual too large");
    c.require(rep.lambda_nontrivial.has_value(), "seed " + std::to_string(seed) + " no value");
    double v = rep.lambda_nontrivial.value_or(0);
    c.require(v >= floor, "seed " + std::to_string(seed) + " below the lower sanity band");
    if (v <= bound) ++within;
  }
  c.note("within bound: " + std::to_string(within) + "/10");
  c.require(within >= 9, "fewer than 9 of 10 seeds within 2*sqrt(3) + 0.25");

  // dense agreement on small graphs
  for (auto [nn, kk] : {std::pair{40, 1}, {14, 2}, {40, 2}}) {
    std::vector<Permutation> gens;
    for (int g = 0; g < r; ++g)
      gens.push_back(random_permutation(nn, 7, static_cast<uint64_t>(g)));
    SchreierOperator op(nn, kk, gens);
    if (!op.connected()) continue;
    SpectralOptions so;
    so.seed = 7;
    SpectralReport rep = spectral_gap(op, so);
    auto dense = dense_spectrum(op);
    // extremes on the deflated complement: drop one copy of +2r, and one of
    // -2r when the graph is bipartite
    std::vector<double> rest(dense.begin(), dense.end());
    rest.erase(std::prev(rest.end()));  // ascending, so the last is +2r
    if (rep.bipartite) rest.erase(rest.begin());
    double dense_top = rest.back();
    double dense_bottom = rest.front();
    c.require(std::abs(rep.lambda_top - dense_top) <= 1e-6,
              "dense top mismatch at n=" + std::to_string(nn) + " k=" + std::to_string(kk));
    c.require(std::abs(rep.lambda_bottom - dense_bottom) <= 1e-6,
              "dense bottom mismatch at n=" + std::to_string(nn));
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& select,
                                            const std::function<void(const std::string&)>& log) {
  struct Entry {
    int id;
    const char* name;
    void (*fn)(Check&);
  };
  const Entry entries[] = {
      {1, "commutator exactness", criterion_commutator},
      {2, "proper-power constant", criterion_square},
      {3, "decay order", criterion_decay},
      {4, "weingarten correctness", criterion_weingarten},
      {5, "projection suite", criterion_projection},
      {6, "polynomial form", criterion_polynomial_form},
      {7, "taylor vanishing", criterion_taylor},
      {8, "euler bound", criterion_euler},
      {9, "monte carlo consistency", criterion_monte_carlo},
      {10, "spectral gap experiment", criterion_spectral},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    if (!select.empty() && std::find(select.begin(), select.end(), e.id) == select.end())
      continue;
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      e.fn(check);
      r.passed = check.ok;
      r.detail = check.detail.str();
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (log) {
      std::ostringstream line;
      line << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ")"
           << " [" << r.seconds << "s]";
      if (!r.detail.empty()) line << " -- " << r.detail;
      log(line.str());
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace wordchar
