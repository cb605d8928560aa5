#ifndef BRAIDORDER_NORMAL_FORM_HPP
#define BRAIDORDER_NORMAL_FORM_HPP

#include <deque>
#include <list>
#include <optional>
#include <vector>

#include "braidorder/braid.hpp"
#include "braidorder/permutation.hpp"

namespace braidorder {

/// Which side a factor sequence is weighted towards.
///
/// A pair (f, g) of adjacent simple factors is LEFT-weighted when every
/// generator left-dividing g already right-divides f (f absorbed all it
/// can), and RIGHT-weighted when every generator right-dividing f already
/// left-divides g.  A sequence of non-identity simple factors in which
/// every adjacent pair is weighted is the unique greedy normal form of the
/// braid for that side.
enum class Weighting { Left, Right };

namespace detail {

/// A sequence of simple factors kept weighted by a worklist of adjacent
/// pairs.  One atom move transfers a single crossing between neighbours
/// (f, g) -> (f*s_i, s_i*g), which preserves the braid exactly when the
/// weighting's guard admits the move; identity factors are erased.  The
/// worklist reschedules both neighbouring pairs after every change, so the
/// fixpoint is reached regardless of processing order, and the fixpoint is
/// the normal form because local weightedness of all pairs characterises
/// it.  Termination: each move shifts one crossing towards the weighted
/// side, a strictly monotone potential.
class FactorChain {
 public:
  FactorChain(int strands, Weighting weighting);

  int strands() const { return strands_; }
  bool empty() const { return factors_.empty(); }

  /// Appends sigma_i as a rightmost factor and restores weightedness.
  void append_letter(int i);
  /// Appends a whole word, restoring weightedness once at the end.
  void append_word(const PositiveBraidWord& w);

  /// True when sigma_i right-divides the braid.  Right weighting only:
  /// there the final factor is the maximal simple right divisor, so the
  /// test is a descent lookup.
  bool divisible_by(int i) const;

  /// Divides the braid by sigma_i on the right (right weighting only);
  /// requires divisible_by(i).
  void divide_by(int i);

  std::vector<Permutation> factors() const;
  PositiveBraidWord to_word() const;

 private:
  struct Node {
    Permutation p;
    bool queued = false;
    explicit Node(Permutation q) : p(std::move(q)) {}
  };
  using List = std::list<Node>;

  int strands_;
  Weighting weighting_;
  List factors_;
  std::deque<List::iterator> work_;  // entries name the right element of a pair

  void schedule(List::iterator it);
  void unschedule(List::iterator it);
  void drain();
  /// Moves atoms between f and g until the pair is weighted; returns
  /// whether anything moved.
  bool stabilize_pair(Permutation& f, Permutation& g) const;
};

}  // namespace detail

/// The left-weighted greedy normal form: the unique factorisation of a
/// positive braid into non-identity simple factors with every adjacent
/// pair left-weighted.  Identity factors never appear; the half twist may
/// appear as an ordinary factor.  The empty braid has no factors.
class GreedyNormalForm {
 public:
  explicit GreedyNormalForm(const PositiveBraidWord& w);

  int strands() const { return strands_; }
  const std::vector<Permutation>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }

  /// Concatenation of the factors' canonical words.
  PositiveBraidWord to_word() const;

  bool operator==(const GreedyNormalForm& o) const {
    return strands_ == o.strands_ && factors_ == o.factors_;
  }

 private:
  int strands_;
  std::vector<Permutation> factors_;
};

/// The right-weighted counterpart, kept incremental: its final factor is
/// the maximal simple right divisor, so right divisibility by a generator
/// is a descent lookup and dividing by one generator is a local update.
class RightWeightedForm {
 public:
  explicit RightWeightedForm(const PositiveBraidWord& w);

  int strands() const { return chain_.strands(); }
  bool empty() const { return chain_.empty(); }

  /// sigma_i right-divides the braid.
  bool divisible_by(int i) const { return chain_.divisible_by(i); }
  /// Removes one sigma_i from the right; requires divisible_by(i).
  void divide_by(int i) { chain_.divide_by(i); }

  std::vector<Permutation> factors() const { return chain_.factors(); }
  PositiveBraidWord to_word() const { return chain_.to_word(); }

 private:
  detail::FactorChain chain_;
};

/// Monoid (= group) equality of positive words, decided by comparing
/// greedy normal forms.
bool equal(const PositiveBraidWord& u, const PositiveBraidWord& v);

/// True when sigma_i right-divides b.
bool right_divides_gen(const PositiveBraidWord& b, int i);

/// The positive word c with b = c*d when d right-divides b, else absent.
std::optional<PositiveBraidWord> right_quotient(const PositiveBraidWord& b,
                                                const PositiveBraidWord& d);

/// Result of clearing denominators from a signed word.
struct PositiveLift {
  PositiveBraidWord word;  ///< a positive word equal to Delta^{2p} * w
  int exponent;            ///< p = number of negative letters in w
};

/// Rewrites a signed word as Delta^{2p} * w with a positive word: each
/// inverse letter is replaced in place by the positive word for
/// Delta^2 * sigma_i^{-1}, which is central-correct because Delta^2
/// commutes with everything.  Pure; safe to call concurrently.
PositiveLift positive_lift(const BraidWord& w);

}  // namespace braidorder

#endif  // BRAIDORDER_NORMAL_FORM_HPP
