#ifndef BRAIDORDER_ORDER_HPP
#define BRAIDORDER_ORDER_HPP

#include "braidorder/arrangement.hpp"
#include "braidorder/braid.hpp"
#include "braidorder/cnormal.hpp"
#include "braidorder/code.hpp"

namespace braidorder {

/// Which of the finitely many left orderings of the braid group to use:
/// an arrangement picks one of the tail-twisted orderings, and a nonempty
/// conjugator P replaces the order by its conjugate, comparing u, v
/// through uP, vP.  The conjugator is empty exactly in the plain case.
struct OrderingSpec {
  Arrangement arrangement;
  PositiveBraidWord conjugator;

  static OrderingSpec normal(Arrangement a) {
    int n = a.strands();
    return OrderingSpec{std::move(a), PositiveBraidWord::identity(n)};
  }
  static OrderingSpec conjugated(Arrangement a, PositiveBraidWord P) {
    if (a.strands() != P.strands()) {
      throw StrandMismatch("conjugator strand count differs from the arrangement");
    }
    return OrderingSpec{std::move(a), std::move(P)};
  }
};

/// The sign of a braid under an ordering.
enum class Sign { Negative, Zero, Positive };

/// A normal form in the group: a signed word with the code of its positive
/// core.
struct NormalForm {
  BraidWord word;
  Code code;
};

/// The canonical form of a positive braid under the ordering: plainly the
/// tail-twisted normal word and code of b; under a conjugated ordering the
/// word of b*P followed by the formal inverse of P (so the word still
/// represents b), with the code of b*P.
NormalForm cnormal(const PositiveBraidWord& b, const OrderingSpec& s);

/// Total left-invariant order on the braid group.  Conjugated orderings
/// recurse on uP, vP.  Signed inputs are cleared to positive words by
/// multiplying both sides with the same central full-twist power; equality
/// is decided by Garside normal forms before any code comparison, and
/// otherwise the left scan of the codes decides.
ComparisonResult compare(const BraidWord& u, const BraidWord& v,
                         const OrderingSpec& s);

/// compare against the identity braid, as a sign.
Sign sign(const BraidWord& w, const OrderingSpec& s);

}  // namespace braidorder

#endif  // BRAIDORDER_ORDER_HPP
