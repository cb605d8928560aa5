#ifndef BRAIDORDER_ALTERNATING_HPP
#define BRAIDORDER_ALTERNATING_HPP

#include <vector>

#include "braidorder/arrangement.hpp"
#include "braidorder/braid.hpp"

namespace braidorder {

/// The alternating decomposition of a positive braid b on n strands:
/// b = f_m * ... * f_1 * f_0 where f_0 is the maximal right divisor in the
/// submonoid generated by sigma_2..sigma_{n-1}, f_1 the maximal right
/// divisor of the quotient in sigma_1..sigma_{n-2}, and so on alternating.
/// f_0 may be empty; every later factor is nonempty (a stalled sweep would
/// force the remainder itself to be empty), so the decomposition is finite
/// and unique.  factors()[i] is f_i.
struct AlternateDecomposition {
  int strands;
  std::vector<PositiveBraidWord> factors;
};

AlternateDecomposition alternate_decomposition(const PositiveBraidWord& b);

/// The twisted normal-form word obtained by recursing on the alternating
/// factors: on 2 strands the word itself; otherwise each factor f_p with
/// p >= 1 rewritten on n-1 strands (conjugating by the index flip when p is
/// even), and f_0 rewritten after shifting every letter down one strand.
/// The result is a canonical word for b.
PositiveBraidWord phi_normal_form(const PositiveBraidWord& b);

/// The head/tail split of b relative to an arrangement whose first examined
/// generator is k1 = a.k(1):
///   tail = maximal right divisor of b omitting sigma_{k1},
///   head = maximal right divisor of b*tail^{-1} omitting sigma_1,
///   main = the rest, so b = main * head * tail.
/// The tail further splits as tail = blocks[0] * ... * blocks[n-3] where
/// blocks[j-1] is the maximal right divisor inside block j's parabolic
/// (generators m_j..M_j-1), peeled for j = n-2 down to 1; the peels exhaust
/// the tail exactly.
struct TailTwistDecomposition {
  PositiveBraidWord main;                 ///< letters unrestricted
  PositiveBraidWord head;                 ///< letters in [2, n-1]
  std::vector<PositiveBraidWord> blocks;  ///< blocks[j-1] in [m_j, M_j-1]
};

TailTwistDecomposition tail_twist_decomposition(const PositiveBraidWord& b,
                                                const Arrangement& a);

/// The canonical normal-form word of b for the ordering of the given
/// arrangement.  Under the trivial arrangement it coincides letter for
/// letter with phi_normal_form.
PositiveBraidWord tail_twisted_normal_form(const PositiveBraidWord& b,
                                           const Arrangement& a);

}  // namespace braidorder

#endif  // BRAIDORDER_ALTERNATING_HPP
