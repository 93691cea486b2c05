#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wordchar/numbers.hpp"
#include "wordchar/polynomial.hpp"

namespace wordchar {

/// Young diagram: weakly decreasing positive parts. Indexes an irreducible
/// representation of the symmetric group on |parts| letters.
class YoungDiagram {
public:
  YoungDiagram() = default;  // the empty diagram (k = 0)
  explicit YoungDiagram(std::vector<long> parts);
  /// Parse comma-separated parts, e.g. "2,1".
  static YoungDiagram parse(const std::string& text);

  const std::vector<long>& parts() const { return parts_; }
  long size() const { return size_; }          // number of boxes
  int rows() const { return static_cast<int>(parts_.size()); }
  long part(int i) const;                      // 0 beyond the last row

  YoungDiagram conjugate() const;
  std::string to_string() const;

  /// The diagram (n - k, parts...) for integer n with n - k >= parts[0].
  YoungDiagram with_long_first_row(long n) const;

  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
  std::vector<long> parts_;
  long size_ = 0;
};

/// Cycle type of a permutation; shares the diagram shape and parser.
using CycleType = YoungDiagram;

/// All diagrams with k boxes, in a fixed deterministic order.
std::vector<YoungDiagram> diagrams_of_size(long k);

/// Irreducible character value chi^lambda(cycle type), exact.
Int character(const YoungDiagram& lambda, const CycleType& type);

/// Dimension by the hook length formula.
Int dim(const YoungDiagram& lambda);

/// The polynomial p with p(n) = dim of the diagram (n-k, lambda) for every
/// integer n >= k + lambda_1; degree k, leading coefficient dim(lambda)/k!.
Polynomial dim_stable(const YoungDiagram& lambda);

/// prod_{j=1}^{k} (n - k + 1 + conj(lambda)_j - j); monic of degree k.
/// Satisfies dim_stable(lambda) * k! * this = dim(lambda) * prod_{c=0}^{2k-1}(n-c).
Polynomial falling_product_lambda(const YoungDiagram& lambda);

}  // namespace wordchar
