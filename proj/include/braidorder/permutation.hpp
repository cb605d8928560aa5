#ifndef BRAIDORDER_PERMUTATION_HPP
#define BRAIDORDER_PERMUTATION_HPP

#include <vector>

#include "braidorder/braid.hpp"
#include "braidorder/errors.hpp"

namespace braidorder {

/// A permutation of n strand positions, standing for a simple braid (a
/// positive braid in which every pair of strands crosses at most once).
///
/// Convention: fwd()[a] is the bottom endpoint of the strand entering top
/// position a (0-indexed).  Composition `then(p, q)` is "first p then q",
/// so the permutation of a concatenated word uv is then(perm(u), perm(v)).
/// Both directions of the table are kept so descent tests cost O(1).
class Permutation {
 public:
  explicit Permutation(int n);                 // identity
  Permutation(int n, std::vector<int> fwd);    // from a forward table

  static Permutation identity(int n) { return Permutation(n); }
  /// The transposition swapping positions i-1 and i (generator sigma_i).
  static Permutation transposition(int n, int i);
  /// The half twist a |-> n-1-a, the permutation of Delta.
  static Permutation half_twist(int n);

  int size() const { return n_; }
  const std::vector<int>& fwd() const { return fwd_; }
  const std::vector<int>& inv() const { return inv_; }

  bool is_identity() const;
  bool is_half_twist() const;

  /// sigma_i left-divides the simple braid of this permutation.
  bool left_descent(int i) const { return fwd_[i - 1] > fwd_[i]; }
  /// sigma_i right-divides the simple braid of this permutation.
  bool right_descent(int i) const { return inv_[i - 1] > inv_[i]; }

  /// Replaces this by then(*this, sigma_i) in O(1): one crossing appended
  /// or removed on the right (removed exactly when right_descent(i)).
  void apply_gen_right(int i);
  /// Replaces this by then(sigma_i, *this) in O(1).
  void apply_gen_left(int i);

  /// Crossing count = word length of the simple braid.
  int inversions() const;

  /// The canonical positive word of the simple braid: repeatedly emits the
  /// smallest left descent.  Length equals inversions().
  PositiveBraidWord word() const;

  Permutation inverse() const;

  bool operator==(const Permutation& o) const {
    return n_ == o.n_ && fwd_ == o.fwd_;
  }

 private:
  int n_;
  std::vector<int> fwd_;
  std::vector<int> inv_;
};

/// Composition "first p then q".
Permutation then(const Permutation& p, const Permutation& q);

/// Underlying permutation of any word (signs ignored, since a generator and
/// its inverse induce the same transposition).
Permutation permutation_of(const BraidWord& w);
Permutation permutation_of(const PositiveBraidWord& w);

}  // namespace braidorder

#endif  // BRAIDORDER_PERMUTATION_HPP
