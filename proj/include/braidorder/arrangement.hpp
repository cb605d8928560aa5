#ifndef BRAIDORDER_ARRANGEMENT_HPP
#define BRAIDORDER_ARRANGEMENT_HPP

#include <string>
#include <vector>

#include "braidorder/errors.hpp"

namespace braidorder {

/// An ordering arrangement on n strands: a permutation (k(1), ..., k(n-1))
/// of {1, ..., n-1} listing which generator is examined first, second, and
/// so on.  The identity arrangement (1, 2, ..., n-1) gives the classical
/// ordering; other arrangements give its finitely many siblings.
class Arrangement {
 public:
  Arrangement(int strands, std::vector<int> k);

  static Arrangement trivial(int strands);

  int strands() const { return strands_; }
  const std::vector<int>& entries() const { return k_; }
  /// k(i), 1-indexed: i in [1, strands-1].
  int k(int i) const;

  bool operator==(const Arrangement&) const = default;
  bool operator<(const Arrangement& o) const {
    if (strands_ != o.strands_) return strands_ < o.strands_;
    return k_ < o.k_;
  }

 private:
  int strands_;
  std::vector<int> k_;
};

/// Bounds of the j-th tail block: the block's braid lives in the parabolic
/// submonoid generated by sigma_m, ..., sigma_{M-1}, a copy of the braid
/// group on M-m+1 strands.  Always 1 <= m < M <= strands, and a block
/// spans at most strands-1 strands, so recursion strictly shrinks.
struct BlockBounds {
  int j;
  int m;
  int M;
  bool operator==(const BlockBounds&) const = default;
};

/// Bounds of block j (1 <= j <= strands-2):
///   m_j = max({1} u {k(i)+1 : i <= j, k(i) < k(j+1)})
///   M_j = min({strands} u {k(i) : i <= j, k(i) > k(j+1)}).
BlockBounds block_bounds(const Arrangement& a, int j);

/// The arrangement steering the head slot's recursion: the entries of a
/// exceeding 1, each decreased by 1, in order; lives on strands-1 strands.
Arrangement derive_k0(const Arrangement& a);

/// The arrangement steering tail block j's recursion: the entries k(i) with
/// i > j that fall inside [m_j, M_j-1], each decreased by m_j-1, in order;
/// lives on M_j-m_j+1 strands.
Arrangement derive_kj(const Arrangement& a, int j);

/// Serialises entries comma-separated, e.g. "2,1,3".
std::string to_string(const Arrangement& a);

/// Parses the to_string format; entries must form a valid arrangement for
/// the given strand count.
Arrangement parse_arrangement(const std::string& text, int strands);

}  // namespace braidorder

#endif  // BRAIDORDER_ARRANGEMENT_HPP
