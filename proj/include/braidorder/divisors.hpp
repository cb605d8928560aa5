#ifndef BRAIDORDER_DIVISORS_HPP
#define BRAIDORDER_DIVISORS_HPP

#include <functional>
#include <set>
#include <vector>

#include "braidorder/braid.hpp"
#include "braidorder/normal_form.hpp"

namespace braidorder {

/// A set of generator indices, each within [1, strands-1] of the braid it
/// is used against.
using GeneratorSet = std::set<int>;

/// Peels the maximal right divisor of `form` whose letters lie in S,
/// mutating `form` into the quotient, and returns the divisor's word.
///
/// Greedy peeling is sound: right divisors form a lattice, so while the
/// maximal S-divisor d is nontrivial some sigma_i (i in S) right-divides
/// the braid, and peeling any such generator leaves a braid whose maximal
/// S-divisor is d minus that crossing; the product of peeled generators in
/// reverse peel order is therefore a word for d regardless of choices.
/// The deterministic rule picks the smallest eligible index.
PositiveBraidWord peel_max_right_divisor(RightWeightedForm& form,
                                         const GeneratorSet& S);

/// The maximal right divisor of b inside the parabolic submonoid generated
/// by { sigma_i : i in S }.  S = {} yields the empty word.
PositiveBraidWord max_right_divisor(const PositiveBraidWord& b,
                                    const GeneratorSet& S);

/// Test hook: like max_right_divisor but the peel order is chosen by
/// `pick`, which receives the currently eligible indices (ascending,
/// nonempty) and returns one of them.  Exists so confluence of greedy
/// peeling can be exercised with randomized orders.
PositiveBraidWord max_right_divisor_with_policy(
    const PositiveBraidWord& b, const GeneratorSet& S,
    const std::function<int(const std::vector<int>&)>& pick);

}  // namespace braidorder

#endif  // BRAIDORDER_DIVISORS_HPP
