#include "braidorder/order.hpp"

#include <algorithm>
#include <string>

#include "braidorder/normal_form.hpp"

namespace braidorder {

namespace {

void check_strands(int strands, const OrderingSpec& s) {
  if (strands != s.arrangement.strands()) {
    throw StrandMismatch("word on " + std::to_string(strands) +
                         " strands under an ordering on " +
                         std::to_string(s.arrangement.strands()));
  }
  if (s.conjugator.strands() != s.arrangement.strands()) {
    throw StrandMismatch("conjugator strand count differs from the arrangement");
  }
}

}  // namespace

NormalForm cnormal(const PositiveBraidWord& b, const OrderingSpec& s) {
  check_strands(b.strands(), s);
  if (s.conjugator.empty()) {
    CNormalResult r = cnormal_positive(b, s.arrangement);
    return NormalForm{r.word.word(), r.code};
  }
  CNormalResult r =
      cnormal_positive(concat(b, s.conjugator), s.arrangement);
  return NormalForm{concat(r.word.word(), s.conjugator.word().inverse()),
                    r.code};
}

ComparisonResult compare(const BraidWord& u, const BraidWord& v,
                         const OrderingSpec& s) {
  check_strands(u.strands(), s);
  check_strands(v.strands(), s);
  if (!s.conjugator.empty()) {
    BraidWord p = s.conjugator.word();
    return compare(concat(u, p), concat(v, p),
                   OrderingSpec::normal(s.arrangement));
  }
  int n = u.strands();
  // Clear inverses: multiply both sides on the left by the same central
  // power of the full twist, which preserves the ordering.
  PositiveLift lift_u = positive_lift(u);
  PositiveLift lift_v = positive_lift(v);
  int exponent = std::max(lift_u.exponent, lift_v.exponent);
  const PositiveBraidWord full_twist = power(delta(n), 2);
  PositiveBraidWord pu =
      concat(power(full_twist, exponent - lift_u.exponent), lift_u.word);
  PositiveBraidWord pv =
      concat(power(full_twist, exponent - lift_v.exponent), lift_v.word);
  if (equal(pu, pv)) return ComparisonResult::Equal;
  return cmp_left(cnormal_positive(pu, s.arrangement).code,
                  cnormal_positive(pv, s.arrangement).code);
}

Sign sign(const BraidWord& w, const OrderingSpec& s) {
  switch (compare(w, BraidWord::identity(w.strands()), s)) {
    case ComparisonResult::Less:
      return Sign::Negative;
    case ComparisonResult::Equal:
      return Sign::Zero;
    case ComparisonResult::Greater:
      return Sign::Positive;
  }
  throw InternalError("unreachable");
}

}  // namespace braidorder
