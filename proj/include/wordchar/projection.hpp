#pragma once

#include <vector>

#include "wordchar/permutation.hpp"
#include "wordchar/rational_function.hpp"
#include "wordchar/set_partition.hpp"
#include "wordchar/young.hpp"

namespace wordchar {

/// Coefficient of the diagram action p_pi inside the orthogonal projection
/// onto the block of the tensor power indexed by lambda:
///   c(n, k, lambda, pi) = dim_stable(lambda) * (-1)^{|pi| + k} / (n)_{|pi|}
///                         * sum over tau in S_k with pairing(tau) >= pi of
///                           chi^lambda(tau).
/// The reduced result vanishes at infinity to order at least del(pi).
RationalFunction proj_coeff(const YoungDiagram& lambda, const PartialMatching& pi);

/// Dense square matrix over exact rationals, row-major.
class RatMatrix {
public:
  RatMatrix(int n, Rat fill = Rat(0)) : n_(n), a_(static_cast<size_t>(n) * n, fill) {}
  int size() const { return n_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }
  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  bool symmetric() const;
  Rat trace() const;

private:
  int n_;
  std::vector<Rat> a_;
};

/// The projection onto the lambda block of the k-fold tensor power of C^n,
/// as an explicit n^k x n^k matrix in the standard basis. Requires
/// n >= 2k and n^k <= 10^4. Exactly idempotent and symmetric, commutes with
/// the diagonal permutation action, and has trace dim(lambda) *
/// dim_stable(lambda)(n).
RatMatrix build_projection(const YoungDiagram& lambda, int n);

/// Character of the long-first-row representation evaluated through the
/// projection: (1/dim lambda) * trace of (g composed with the projection).
Rat bitrace_character(const YoungDiagram& lambda, const Permutation& g, int n);

/// Builds (e1 - e2) x ... x (e_{2k-1} - e_{2k}), symmetrizes it into the
/// lambda-isotypic component, and checks that the component is nonzero,
/// fixed by this lambda's projection and annihilated by every other one.
bool xi_projector_check(const YoungDiagram& lambda, int n);

/// The coordinate-permuting action on basis vectors of the tensor power:
/// index vector I maps to (I[s(1)-1], ..., I[s(k)-1]) for 1-based images s.
std::vector<int> permute_tensor_index(const std::vector<int>& index,
                                      const std::vector<int>& s);

}  // namespace wordchar
