#include "wordchar/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace wordchar {

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= n() || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[static_cast<size_t>(x)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < n(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> img(a.images_.size());
  for (int i = 0; i < a.n(); ++i) img[static_cast<size_t>(i)] = a.apply(b.apply(i));
  return Permutation(std::move(img));
}

int Permutation::fixed_points() const {
  int f = 0;
  for (int i = 0; i < n(); ++i) f += apply(i) == i;
  return f;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<bool> seen(static_cast<size_t>(p.n()), false);
  std::vector<long> lens;
  for (int i = 0; i < p.n(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    long len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = p.apply(j)) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<long>());
  return CycleType(std::move(lens));
}

namespace {
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

RandomStream::RandomStream(uint64_t seed, uint64_t position)
    : state_(mix64(seed + 0x9E3779B97F4A7C15ull * (position + 1)) ^
             mix64(position + 0x632BE59BD9B4E019ull)) {}

uint64_t RandomStream::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  return mix64(state_);
}

uint64_t RandomStream::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RandomStream: zero bound");
  // Reject the tail of the 64-bit range so every residue is equally likely.
  uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
  while (true) {
    uint64_t v = next();
    if (v <= limit || limit == ~uint64_t{0}) return v % bound;
  }
}

double RandomStream::unit_symmetric() {
  // 53 mantissa bits; arithmetic is fixed, so the value depends only on the
  // stream, not on platform distributions.
  uint64_t v = next() >> 11;
  return static_cast<double>(v) / 4503599627370495.0 * 2.0 - 1.0;
}

Permutation random_permutation(int n, uint64_t seed, uint64_t position) {
  if (n < 1) throw std::invalid_argument("random_permutation: n must be positive");
  RandomStream rs(seed, position);
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rs.below(static_cast<uint64_t>(i) + 1));
    std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
  }
  return Permutation(std::move(img));
}

Permutation evaluate_letters(const std::vector<Letter>& letters,
                             const std::vector<Permutation>& perms) {
  if (perms.empty()) throw std::invalid_argument("evaluate_word: no generator images");
  Permutation acc = Permutation::identity(perms.front().n());
  for (const Letter& l : letters) {
    if (l.generator < 0 || l.generator >= static_cast<int>(perms.size()))
      throw std::invalid_argument("evaluate_word: rank mismatch");
    const Permutation& g = perms[static_cast<size_t>(l.generator)];
    acc = acc * (l.sign == 1 ? g : g.inverse());
  }
  return acc;
}

Permutation evaluate_word(const ReducedWord& w, const std::vector<Permutation>& perms) {
  if (static_cast<int>(perms.size()) != w.rank())
    throw std::invalid_argument("evaluate_word: rank mismatch");
  if (w.length() == 0) {
    if (perms.empty()) throw std::invalid_argument("evaluate_word: empty word needs n");
    return Permutation::identity(perms.front().n());
  }
  return evaluate_letters(w.letters(), perms);
}

}  // namespace wordchar
