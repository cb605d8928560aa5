#ifndef BRAIDORDER_CNORMAL_HPP
#define BRAIDORDER_CNORMAL_HPP

#include "braidorder/arrangement.hpp"
#include "braidorder/braid.hpp"
#include "braidorder/code.hpp"

namespace braidorder {

/// A canonical normal-form word together with its code.
struct CNormalResult {
  PositiveBraidWord word;
  Code code;
};

/// The canonical normal form of a positive braid under the ordering of the
/// given arrangement, produced in one recursion:
///
/// On 2 strands the word is sigma_1^len with code leaf(len).  Otherwise b
/// is split by tail_twist_decomposition into main * head * blocks, the
/// main part is alternately decomposed (its own head slot is empty by
/// maximality of the head peel), and every factor recurses in its slot's
/// context: alternating factors f_p on n-1 strands under the trivial
/// arrangement (index-flipped when p is even), the head shifted down one
/// strand under the head-derived arrangement, block j shifted down m_j-1
/// strands under its derived arrangement.  The word is the concatenation
/// of the recursed factor words mapped back into place; the code stores
/// each slot's nonzero sub-code at its position.
CNormalResult cnormal_positive(const PositiveBraidWord& b,
                               const Arrangement& a);

}  // namespace braidorder

#endif  // BRAIDORDER_CNORMAL_HPP
