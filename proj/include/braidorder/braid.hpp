#ifndef BRAIDORDER_BRAID_HPP
#define BRAIDORDER_BRAID_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "braidorder/errors.hpp"

namespace braidorder {

/// A word in the generators of the braid group on `strands` strands.
///
/// Letters are nonzero integers: +i stands for the Artin generator
/// sigma_i (1 <= i <= strands-1), -i for its inverse.  The word is a free
/// object: no relations are applied, and two words are == only letterwise.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// True when every letter is positive.
  bool is_positive() const;

  /// The formal inverse: letters reversed and negated.
  BraidWord inverse() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// A word in the positive braid monoid: every letter is a generator index
/// in [1, strands-1].  Positive words represent monoid elements; monoid
/// equality is decided elsewhere (greedy normal forms), == is letterwise.
class PositiveBraidWord {
 public:
  PositiveBraidWord(int strands, std::vector<int> letters);

  static PositiveBraidWord identity(int strands) {
    return PositiveBraidWord(strands, {});
  }

  /// Embeds a signed word that happens to be positive.
  /// Throws NotPositive when a negative letter is present.
  static PositiveBraidWord from_word(const BraidWord& w);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// The same word viewed as a signed braid word.
  BraidWord word() const { return BraidWord(strands_, letters_); }

  bool operator==(const PositiveBraidWord&) const = default;

  /// Lexicographic order on (strands, letters); lets words key containers.
  bool operator<(const PositiveBraidWord& o) const {
    if (strands_ != o.strands_) return strands_ < o.strands_;
    return letters_ < o.letters_;
  }

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Concatenation; both words must share a strand count.
BraidWord concat(const BraidWord& u, const BraidWord& v);
PositiveBraidWord concat(const PositiveBraidWord& u,
                         const PositiveBraidWord& v);

/// The inner automorphism by the half twist restricted to words:
/// sigma_i |-> sigma_{n-i} letterwise.  Positive words only; an involution.
PositiveBraidWord flip(const PositiveBraidWord& w);

/// Destabilisation shift: subtract d from every letter's index and drop d
/// strands.  Throws LetterTooSmall when some |letter| <= d, and
/// StrandTooSmall when fewer than 2 strands would remain.
BraidWord shift_down(const BraidWord& w, int d);
PositiveBraidWord shift_down(const PositiveBraidWord& w, int d);

/// Stabilisation shift: add d >= 0 to every letter's index, gaining d strands.
PositiveBraidWord shift_up(const PositiveBraidWord& w, int d);

/// Reinterprets the same letters on `strands` strands (widening or
/// narrowing); the letters must fit, else IndexOutOfRange.
PositiveBraidWord with_strands(const PositiveBraidWord& w, int strands);

/// The positive half twist Delta on n strands:
/// (sigma_1..sigma_{n-1})(sigma_1..sigma_{n-2})...(sigma_1).
PositiveBraidWord delta(int n);

/// w repeated k >= 0 times.
PositiveBraidWord power(const PositiveBraidWord& w, int k);

/// Serialises letters separated by single spaces, e.g. "1 -3 2";
/// the empty word serialises to the empty string.
std::string to_string(const BraidWord& w);
std::string to_string(const PositiveBraidWord& w);

/// Parses the to_string format (whitespace-separated signed integers).
/// Malformed text raises Error; out-of-range letters IndexOutOfRange.
BraidWord parse_word(const std::string& text, int strands);
PositiveBraidWord parse_positive_word(const std::string& text, int strands);

}  // namespace braidorder

#endif  // BRAIDORDER_BRAID_HPP
