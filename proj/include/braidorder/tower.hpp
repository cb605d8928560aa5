#ifndef BRAIDORDER_TOWER_HPP
#define BRAIDORDER_TOWER_HPP

#include <vector>

#include "braidorder/arrangement.hpp"
#include "braidorder/braid.hpp"
#include "braidorder/code.hpp"

namespace braidorder {

/// A word with a recorded top-level split W = A_m ... A_1 A_0 X_1 ... X_{n-2}:
/// a_factors[p] is A_p (the alternating head factors, rightmost first in
/// index, leftmost in the word), x_factors[j-1] is X_j (the tail blocks).
/// The word must equal the concatenation, and each factor must stay inside
/// its slot's letter set:
///   A_p for odd p in [1, n-2]; A_p for even p and A_0 in [2, n-1];
///   X_j in [m_j, M_j-1] for the arrangement's block bounds.
/// Empty factors are allowed anywhere (an A_m that is empty codes the same
/// as the stripped tower).  On 2 strands a tower degenerates to the bare
/// word: a_factors = {word}, no x_factors.
struct Tower {
  PositiveBraidWord word;
  std::vector<PositiveBraidWord> a_factors;
  std::vector<PositiveBraidWord> x_factors;
};

/// The code a tower asserts for its word: each block braid is sent to its
/// slot's context (flip for even p, shift for the head and the tail
/// blocks) and coded canonically there; the slot codes assemble into the
/// composite.  Structure violations raise Error, letter-set violations
/// MembershipViolation.  The code of the braid itself is the maximum of
/// code_from_tower over all representatives and splits, attained exactly
/// by the canonical normal form's split.
Code code_from_tower(const Tower& t, const Arrangement& a);

}  // namespace braidorder

#endif  // BRAIDORDER_TOWER_HPP
