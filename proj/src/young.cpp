#include "wordchar/young.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace wordchar {

YoungDiagram::YoungDiagram(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("YoungDiagram: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::vector<long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad diagram: " + text);
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("bad diagram: " + text);
  return YoungDiagram(std::move(parts));
}

long YoungDiagram::part(int i) const {
  return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
}

YoungDiagram YoungDiagram::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<long> conj(static_cast<size_t>(parts_[0]), 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
  return YoungDiagram(std::move(conj));
}

std::string YoungDiagram::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

YoungDiagram YoungDiagram::with_long_first_row(long n) const {
  long first = n - size_;
  if (first < (parts_.empty() ? 1 : parts_[0]))
    throw std::invalid_argument("with_long_first_row: n too small for a valid diagram");
  std::vector<long> parts;
  parts.reserve(parts_.size() + 1);
  parts.push_back(first);
  parts.insert(parts.end(), parts_.begin(), parts_.end());
  return YoungDiagram(std::move(parts));
}

std::vector<YoungDiagram> diagrams_of_size(long k) {
  std::vector<YoungDiagram> out;
  std::vector<long> cur;
  // Decreasing-part backtracking; first part largest first.
  std::function<void(long, long)> rec = [&](long remaining, long maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

namespace {

// Character recursion over border-strip removals, working on the set of
// first-column hook lengths (beta numbers). Removing a strip of length t
// replaces some beta b by b - t when b - t is nonnegative and unoccupied;
// the sign is (-1)^{number of betas passed over}.
struct CharacterContext {
  std::vector<long> cycles;
  std::map<std::pair<std::vector<long>, size_t>, Int> memo;

  Int eval(const std::vector<long>& parts, size_t pos) {
    if (parts.empty()) return 1;
    auto key = std::make_pair(parts, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const long t = cycles[pos];
    const int rows = static_cast<int>(parts.size());
    std::vector<long> beta(parts.size());
    for (int i = 0; i < rows; ++i)
      beta[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)] + (rows - 1 - i);
    // beta is strictly decreasing.
    Int total = 0;
    for (int i = 0; i < rows; ++i) {
      long b = beta[static_cast<size_t>(i)];
      long nb = b - t;
      if (nb < 0) continue;
      bool occupied = false;
      int passed = 0;
      for (int j = 0; j < rows; ++j) {
        if (j == i) continue;
        long o = beta[static_cast<size_t>(j)];
        if (o == nb) { occupied = true; break; }
        if (o < b && o > nb) ++passed;
      }
      if (occupied) continue;
      std::vector<long> nbeta = beta;
      nbeta[static_cast<size_t>(i)] = nb;
      std::sort(nbeta.begin(), nbeta.end(), std::greater<long>());
      std::vector<long> nparts;
      const int m = static_cast<int>(nbeta.size());
      for (int j = 0; j < m; ++j) {
        long p = nbeta[static_cast<size_t>(j)] - (m - 1 - j);
        if (p > 0) nparts.push_back(p);
        else if (p < 0) throw std::logic_error("character: corrupt beta set");
      }
      Int sub = eval(nparts, pos + 1);
      if (passed % 2 != 0) sub = -sub;
      total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

Int character(const YoungDiagram& lambda, const CycleType& type) {
  if (lambda.size() != type.size())
    throw std::invalid_argument("character: diagram and cycle type sizes differ");
  CharacterContext ctx;
  ctx.cycles = type.parts();
  return ctx.eval(lambda.parts(), 0);
}

Int dim(const YoungDiagram& lambda) {
  if (lambda.size() == 0) return 1;
  YoungDiagram conj = lambda.conjugate();
  Int hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (long j = 0; j < lambda.part(i); ++j) {
      long arm = lambda.part(i) - j - 1;
      long leg = conj.part(static_cast<int>(j)) - i - 1;
      hooks *= (arm + leg + 1);
    }
  }
  Int num = factorial(lambda.size());
  if (!mpz_divisible_p(num.get_mpz_t(), hooks.get_mpz_t()))
    throw std::logic_error("dim: hook product does not divide k!");
  return num / hooks;
}

Polynomial dim_stable(const YoungDiagram& lambda) {
  const long k = lambda.size();
  if (k == 0) return Polynomial(Rat(1));
  // Exact Lagrange interpolation through k+1 hook-length evaluations at
  // n0 = k + lambda_1 + j.
  const long base = k + lambda.part(0);
  std::vector<Rat> xs, ys;
  for (long j = 0; j <= k; ++j) {
    long n0 = base + j;
    xs.emplace_back(n0);
    ys.emplace_back(dim(lambda.with_long_first_row(n0)));
  }
  Polynomial p;
  for (size_t i = 0; i < xs.size(); ++i) {
    Polynomial term(ys[i]);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      term *= Polynomial({-xs[j], Rat(1)}).scaled(Rat(1) / (xs[i] - xs[j]));
    }
    p += term;
  }
  if (p.degree() != static_cast<int>(k) ||
      p.leading_coeff() != Rat(dim(lambda)) / Rat(factorial(k)))
    throw InvariantViolation("dim_stable: interpolation failed shape check");
  return p;
}

Polynomial falling_product_lambda(const YoungDiagram& lambda) {
  const long k = lambda.size();
  YoungDiagram conj = lambda.conjugate();
  Polynomial p(Rat(1));
  for (long j = 1; j <= k; ++j) {
    long c = -k + 1 + conj.part(static_cast<int>(j - 1)) - j;
    p *= Polynomial({Rat(c), Rat(1)});
  }
  return p;
}

}  // namespace wordchar
