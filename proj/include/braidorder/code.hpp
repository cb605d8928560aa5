#ifndef BRAIDORDER_CODE_HPP
#define BRAIDORDER_CODE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidorder/arrangement.hpp"

namespace braidorder {

/// Three-way outcome of an order comparison.
enum class ComparisonResult { Less, Equal, Greater };

/// The transfinite code of a braid's normal form: on 2 strands a single
/// count (leaf), on n >= 3 strands a map from slot positions to sub-codes.
///
/// Positions run over m, ..., 1 (alternating head factors), 0 (the shifted
/// head slot) and -1, ..., -(n-2) (the tail blocks); only nonzero sub-codes
/// are stored, positions strictly descending.  Every code carries its
/// context — strand count and arrangement — and each stored sub-code must
/// carry exactly the context of its slot: positions >= 1 live on n-1
/// strands under the trivial arrangement, position 0 on n-1 strands under
/// the head-derived arrangement, position -j on M_j-m_j+1 strands under
/// block j's derived arrangement.
class Code {
 public:
  using Entries = std::vector<std::pair<int, Code>>;

  /// A 2-strand code holding a crossing count >= 0.
  static Code leaf(long long value);

  /// An n>=3-strand code from nonzero entries in strictly descending
  /// position order.  Wrong slot contexts raise ContextMismatch; invalid
  /// positions IndexOutOfRange.
  static Code composite(const Arrangement& a, Entries entries);

  int strands() const { return arrangement_.strands(); }
  const Arrangement& arrangement() const { return arrangement_; }

  bool is_leaf() const { return strands() == 2; }
  long long leaf_value() const;
  const Entries& entries() const;

  /// True for the code of the empty braid: a zero leaf or an entry-free
  /// composite.
  bool is_zero() const;

  /// The sub-code at the given position; the slot's zero code when the
  /// position is not stored.
  Code at(int position) const;

  /// The context (strands, arrangement) of a slot of this code.
  std::pair<int, Arrangement> slot_context(int position) const;

  bool operator==(const Code& o) const;

 private:
  Code(Arrangement a, long long value, Entries entries)
      : arrangement_(std::move(a)),
        value_(value),
        entries_(std::move(entries)) {}

  Arrangement arrangement_;  // trivial(2) for leaves
  long long value_ = 0;      // leaf payload
  Entries entries_;          // composite payload, descending positions
};

/// The zero code of a context.
Code zero_code(int strands, const Arrangement& a);

/// The context of a slot, independent of any code instance.
std::pair<int, Arrangement> slot_context(const Arrangement& a, int position);

/// Left comparison: scan positions from the highest downward (padding the
/// shorter code with zeros), recursing with cmp_left; the first differing
/// slot decides.  Contexts must match, else ContextMismatch.
ComparisonResult cmp_left(const Code& x, const Code& y);

/// Right comparison: scan positions from -(n-2) upward, recursing with
/// cmp_right; the first differing slot decides.
ComparisonResult cmp_right(const Code& x, const Code& y);

/// Renders the code in the conventional bracket form: a leaf as "(v)"; a
/// composite as its slots from max(0, top nonzero position) down to
/// -(n-2) — position 0 always materialised — except that an all-zero
/// composite renders "(0)".  Slots of 3-strand codes print as bare
/// integers; slots of wider codes print parenthesised, recursively.
std::string to_string(const Code& c);

}  // namespace braidorder

#endif  // BRAIDORDER_CODE_HPP
