#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "wordchar/lanczos.hpp"

using namespace wordchar;

namespace {

std::vector<Permutation> random_generators(int n, int r, uint64_t seed) {
  std::vector<Permutation> gens;
  for (int g = 0; g < r; ++g)
    gens.push_back(random_permutation(n, seed, static_cast<uint64_t>(g)));
  return gens;
}

}  // namespace

TEST_CASE("tuple ranking") {
  TupleSpace one(5, 1);
  for (int i = 0; i < 5; ++i) CHECK(one.rank({i}) == i);

  TupleSpace pairs(3, 2);
  CHECK(pairs.size() == 6);
  std::vector<std::vector<int>> expect{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (int64_t r = 0; r < 6; ++r) {
    CHECK(pairs.unrank(r) == expect[static_cast<size_t>(r)]);
    CHECK(pairs.rank(expect[static_cast<size_t>(r)]) == r);
  }

  TupleSpace big(50, 3);
  RandomStream rs(17, 0);
  for (int t = 0; t < 10000; ++t) {
    int64_t r = static_cast<int64_t>(rs.below(static_cast<uint64_t>(big.size())));
    CHECK(big.rank(big.unrank(r)) == r);
  }
  CHECK_THROWS_AS(pairs.rank({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(pairs.unrank(6), std::out_of_range);
}

TEST_CASE("three cycle graph") {
  Permutation cyc({1, 2, 0});
  SchreierOperator op(3, 1, {cyc});
  CHECK(op.connected());
  auto spectrum = dense_spectrum(op);
  CHECK(spectrum.size() == 3);
  CHECK(std::abs(spectrum[2] - 2.0) < 1e-12);
  CHECK(std::abs(spectrum[0] + 1.0) < 1e-12);

  SpectralReport rep = spectral_gap(op, {});
  CHECK(rep.converged);
  REQUIRE(rep.lambda_nontrivial.has_value());
  CHECK(std::abs(*rep.lambda_nontrivial - 1.0) < 1e-8);
}

TEST_CASE("row sums equal the degree") {
  auto gens = random_generators(12, 2, 3);
  SchreierOperator op(12, 2, gens);
  std::vector<double> ones(static_cast<size_t>(op.size()), 1.0), out;
  op.apply(ones, out);
  for (double v : out) CHECK(v == 4.0);
}

TEST_CASE("identity generators give loops and full disconnection") {
  SchreierOperator op(5, 1, {Permutation::identity(5)});
  CHECK(op.component_count() == 5);
  CHECK_FALSE(op.connected());
  CHECK_THROWS_AS(spectral_gap(op, {}), std::domain_error);
  std::vector<double> x(5, 1.0), y;
  op.apply(x, y);
  for (double v : y) CHECK(v == 2.0);  // 2r * I
}

TEST_CASE("matvec is symmetric") {
  auto gens = random_generators(30, 2, 5);
  SchreierOperator op(30, 2, gens);
  CHECK(op.connected());  // seed-pinned regression
  RandomStream rs(23, 0);
  std::vector<double> x(static_cast<size_t>(op.size())), y(x.size()), ax, ay;
  for (int trial = 0; trial < 5; ++trial) {
    for (auto& v : x) v = rs.unit_symmetric();
    for (auto& v : y) v = rs.unit_symmetric();
    op.apply(x, ax);
    op.apply(y, ay);
    double lhs = 0, rhs = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      lhs += ax[i] * y[i];
      rhs += x[i] * ay[i];
    }
    CHECK(std::abs(lhs - rhs) < 1e-12 * x.size());
  }
}

TEST_CASE("lanczos matches the dense oracle") {
  for (auto [n, k, seed] : {std::tuple{14, 2, 4ull}, {30, 1, 4ull}, {9, 2, 6ull}}) {
    auto gens = random_generators(n, 2, seed);
    SchreierOperator op(n, k, gens);
    if (!op.connected()) continue;
    SpectralReport rep = spectral_gap(op, {});
    REQUIRE(rep.converged);
    auto dense = dense_spectrum(op);
    std::vector<double> rest(dense.begin(), std::prev(dense.end()));
    if (rep.bipartite) rest.erase(rest.begin());
    CHECK(std::abs(rep.lambda_top - rest.back()) < 1e-6);
    CHECK(std::abs(rep.lambda_bottom - rest.front()) < 1e-6);
  }
}

TEST_CASE("two generators on a pair given by one transposition") {
  // single transposition at n = 2, k = 1: spectrum {+2, -2}, all trivial
  SchreierOperator op(2, 1, {Permutation({1, 0})});
  CHECK(op.connected());
  SpectralReport rep = spectral_gap(op, {});
  CHECK(rep.bipartite);
  CHECK_FALSE(rep.lambda_nontrivial.has_value());
}

TEST_CASE("even cycle graph: bipartite deflation against the known spectrum") {
  // single n-cycle generator at k = 1 gives the cycle graph; for even n it
  // is bipartite with spectrum 2*cos(2*pi*j/n)
  const int n = 12;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
  SchreierOperator op(n, 1, {Permutation(img)});
  REQUIRE(op.connected());
  SpectralReport rep = spectral_gap(op, {});
  CHECK(rep.bipartite);
  CHECK(rep.converged);
  REQUIRE(rep.lambda_nontrivial.has_value());
  CHECK(std::abs(*rep.lambda_nontrivial - 2 * std::cos(2 * M_PI / n)) < 1e-8);
  CHECK(*rep.lambda_nontrivial <= 2.0);
}

TEST_CASE("one-point spectrum embeds into the pair spectrum") {
  for (int n : {8, 10, 12}) {
    auto gens = random_generators(n, 2, 11);
    SchreierOperator op1(n, 1, gens);
    SchreierOperator op2(n, 2, gens);
    auto s1 = dense_spectrum(op1);
    auto s2 = dense_spectrum(op2);
    for (double v : s1) {
      bool found = false;
      for (double w : s2) found = found || std::abs(v - w) < 1e-8;
      CHECK(found);
    }
  }
}

TEST_CASE("alon boppana band at moderate size") {
  // seed-pinned sanity band: the nontrivial eigenvalue of a random
  // 4-regular Schreier graph on pairs sits above 2*sqrt(3) - 0.5
  auto gens = random_generators(100, 2, 21);
  SchreierOperator op(100, 2, gens);
  REQUIRE(op.connected());
  SpectralReport rep = spectral_gap(op, {});
  REQUIRE(rep.lambda_nontrivial.has_value());
  CHECK(*rep.lambda_nontrivial >= 2 * std::sqrt(3.0) - 0.5);
  CHECK(*rep.lambda_nontrivial <= 4.0);
}
