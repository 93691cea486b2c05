#include "wordchar/projection.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wordchar {

RationalFunction proj_coeff(const YoungDiagram& lambda, const PartialMatching& pi) {
  const int k = pi.k();
  if (lambda.size() != k) throw std::invalid_argument("proj_coeff: |lambda| != k");
  Int chi_sum = 0;
  for (const auto& tau : completions(pi)) {
    Permutation t([&] {
      std::vector<int> img(tau.size());
      for (size_t i = 0; i < tau.size(); ++i) img[i] = tau[i] - 1;
      return img;
    }());
    chi_sum += character(lambda, cycle_type(t));
  }
  Rat sign((pi.block_count() + k) % 2 == 0 ? 1 : -1);
  Polynomial num = dim_stable(lambda).scaled(sign * Rat(chi_sum));
  return RationalFunction(num, falling_factorial(pi.block_count()));
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix r(x.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int l = 0; l < x.n_; ++l) {
      const Rat& v = x.at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < x.n_; ++j) r.at(i, j) += v * y.at(l, j);
    }
  return r;
}

bool RatMatrix::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Rat RatMatrix::trace() const {
  Rat t(0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

namespace {

long checked_tensor_dim(int n, int k) {
  long dim = 1;
  for (int i = 0; i < k; ++i) {
    dim *= n;
    if (dim > 10'000) throw std::domain_error("tensor power exceeds the dense oracle scale");
  }
  return dim;
}

std::vector<int> unrank_index(long r, int n, int k) {
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    idx[static_cast<size_t>(i)] = static_cast<int>(r % n);
    r /= n;
  }
  return idx;
}

// The coincidence pattern of the concatenated pair (I, J) as a partition of
// [2k]; the diagram action matrix entry is 1 exactly when this pattern
// equals pi.
SetPartition coincidence_pattern(const std::vector<int>& I, const std::vector<int>& J) {
  std::vector<int> all(I);
  all.insert(all.end(), J.begin(), J.end());
  return SetPartition::from_labels(all);
}

}  // namespace

RatMatrix build_projection(const YoungDiagram& lambda, int n) {
  const int k = static_cast<int>(lambda.size());
  if (n < 2 * k) throw std::invalid_argument("build_projection: need n >= 2k");
  const long dimension = checked_tensor_dim(n, k);

  // Coefficients keyed by the canonical partition of [2k].
  std::map<SetPartition, Rat> coeff;
  for (const auto& pi : enumerate_submatchings(k)) {
    RationalFunction c = proj_coeff(lambda, pi);
    coeff[pi.as_partition()] = c.is_zero() ? Rat(0) : c.evaluate(Rat(n));
  }

  RatMatrix q(static_cast<int>(dimension));
  std::vector<std::vector<int>> indices(static_cast<size_t>(dimension));
  for (long r = 0; r < dimension; ++r) indices[static_cast<size_t>(r)] = unrank_index(r, n, k);
  for (long col = 0; col < dimension; ++col) {
    for (long row = 0; row < dimension; ++row) {
      auto pattern = coincidence_pattern(indices[static_cast<size_t>(col)],
                                         indices[static_cast<size_t>(row)]);
      auto it = coeff.find(pattern);
      if (it != coeff.end() && it->second != 0)
        q.at(static_cast<int>(row), static_cast<int>(col)) = it->second;
    }
  }
  return q;
}

Rat bitrace_character(const YoungDiagram& lambda, const Permutation& g, int n) {
  const int k = static_cast<int>(lambda.size());
  if (g.n() != n) throw std::invalid_argument("bitrace_character: permutation degree mismatch");
  RatMatrix q = build_projection(lambda, n);
  const long dimension = q.size();
  // trace(g o Q) = sum_I Q[g^{-1}(I)][I]
  Permutation ginv = g.inverse();
  Rat tr(0);
  for (long col = 0; col < dimension; ++col) {
    auto idx = unrank_index(col, n, k);
    long row = 0;
    for (int i = 0; i < k; ++i) row = row * n + ginv.apply(idx[static_cast<size_t>(i)]);
    tr += q.at(static_cast<int>(row), static_cast<int>(col));
  }
  return tr / Rat(dim(lambda));
}

std::vector<int> permute_tensor_index(const std::vector<int>& index,
                                      const std::vector<int>& s) {
  std::vector<int> out(index.size());
  for (size_t i = 0; i < index.size(); ++i)
    out[i] = index[static_cast<size_t>(s[i] - 1)];
  return out;
}

namespace {

std::vector<Rat> apply_matrix(const RatMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(v.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m.at(static_cast<int>(i), static_cast<int>(j)) != 0 && v[j] != 0)
        out[i] += m.at(static_cast<int>(i), static_cast<int>(j)) * v[j];
  return out;
}

}  // namespace

bool xi_projector_check(const YoungDiagram& lambda, int n) {
  const int k = static_cast<int>(lambda.size());
  if (n < 2 * k) throw std::invalid_argument("xi_projector_check: need n >= 2k");
  const long dimension = checked_tensor_dim(n, k);

  // xi = (e1 - e2) x (e3 - e4) x ...: 2^k signed basis vectors.
  std::vector<Rat> xi(static_cast<size_t>(dimension), Rat(0));
  for (long mask = 0; mask < (1L << k); ++mask) {
    long r = 0;
    int sign = 1;
    for (int i = 0; i < k; ++i) {
      bool second = (mask >> i) & 1;
      r = r * n + (2 * i + (second ? 1 : 0));
      if (second) sign = -sign;
    }
    xi[static_cast<size_t>(r)] = Rat(sign);
  }

  // Isotypic symmetrization: (dim lambda / k!) sum_s chi(s) * coordinate
  // permutation by s.
  std::vector<Rat> xi_l(static_cast<size_t>(dimension), Rat(0));
  std::vector<int> s(static_cast<size_t>(k));
  std::iota(s.begin(), s.end(), 1);
  do {
    Permutation sp([&] {
      std::vector<int> img(s.size());
      for (size_t i = 0; i < s.size(); ++i) img[i] = s[i] - 1;
      return img;
    }());
    Rat w = Rat(character(lambda, cycle_type(sp))) * Rat(dim(lambda)) / Rat(factorial(k));
    if (w == 0) continue;
    for (long r = 0; r < dimension; ++r) {
      if (xi[static_cast<size_t>(r)] == 0) continue;
      auto idx = unrank_index(r, n, k);
      auto moved = permute_tensor_index(idx, s);
      long r2 = 0;
      for (int i = 0; i < k; ++i) r2 = r2 * n + moved[static_cast<size_t>(i)];
      xi_l[static_cast<size_t>(r2)] += w * xi[static_cast<size_t>(r)];
    }
  } while (std::next_permutation(s.begin(), s.end()));

  bool nonzero = std::any_of(xi_l.begin(), xi_l.end(), [](const Rat& x) { return x != 0; });
  if (!nonzero) return false;

  for (const auto& mu : diagrams_of_size(k)) {
    RatMatrix q = build_projection(mu, n);
    std::vector<Rat> image = apply_matrix(q, xi_l);
    if (mu == lambda) {
      if (image != xi_l) return false;
    } else {
      if (std::any_of(image.begin(), image.end(), [](const Rat& x) { return x != 0; }))
        return false;
    }
  }
  return true;
}

}  // namespace wordchar
