#ifndef BRAIDORDER_CUTTING_HPP
#define BRAIDORDER_CUTTING_HPP

#include <string>
#include <vector>

#include "braidorder/arrangement.hpp"
#include "braidorder/braid.hpp"

namespace braidorder {

/// The cutting sequence of an arc in the punctured disk: the ordered list
/// of signed wall crossings, entry +v or -v meaning the arc crosses wall v
/// upward or downward.  With n punctures the walls are 1..n+1; entries are
/// nonzero with |entry| <= n+1.  The sequence is tight when no two
/// adjacent entries are +v, -v or -v, +v.
struct CuttingSequence {
  int punctures;
  std::vector<int> entries;

  CuttingSequence(int punctures, std::vector<int> entries);

  bool operator==(const CuttingSequence&) const = default;
};

/// The image of a cutting sequence under the generator sigma_j, which
/// twists the region between walls j and j+2: every +(j+1) becomes
/// (+j, -(j+1), +(j+2)), every -(j+1) becomes (-(j+2), +(j+1), -j), all
/// other entries are untouched.  Walls 1 and n+1 are never twisted.  The
/// result is not tightened.
CuttingSequence apply_generator(const CuttingSequence& c, int j);

/// Removes adjacent cancelling pairs (+v, -v) / (-v, +v) until none
/// remain.  Cancellation is confluent, so the result is the unique tight
/// form.
CuttingSequence tighten(const CuttingSequence& c);

/// The tight image of c under the positive braid w: the letters act right
/// to left (the leftmost letter is applied last, matching composition),
/// and the result is tightened once at the end.
CuttingSequence act(const PositiveBraidWord& w, const CuttingSequence& c);

/// The initial arc of an arrangement: the single crossing (+(k(1)+1)).
CuttingSequence gamma1(const Arrangement& a);

/// Renders "(+2,-3,+1)"; the empty sequence renders "()".
std::string to_string(const CuttingSequence& c);

/// Parses the to_string format (parentheses optional).
CuttingSequence parse_cutting_sequence(const std::string& text,
                                       int punctures);

}  // namespace braidorder

#endif  // BRAIDORDER_CUTTING_HPP
