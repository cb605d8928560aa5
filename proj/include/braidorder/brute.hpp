#ifndef BRAIDORDER_BRUTE_HPP
#define BRAIDORDER_BRUTE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "braidorder/arrangement.hpp"
#include "braidorder/braid.hpp"
#include "braidorder/cnormal.hpp"
#include "braidorder/divisors.hpp"
#include "braidorder/tower.hpp"

namespace braidorder {

/// Enumeration caps for the brute-force oracles.  Exceeding one raises
/// BudgetExceeded, except inside the witness search, whose contract makes
/// an exhausted budget indistinguishable from plain failure to find.
struct OracleBudget {
  std::size_t max_closure = 2'000'000;   ///< words per rewriting closure
  std::size_t max_words = 5'000'000;     ///< words visited per enumeration
  std::size_t witness_nodes = 150'000;   ///< breadth-first search nodes
};

/// Brute-force reference implementations that bypass the Garside machinery
/// entirely: positive words are handled through their finite rewriting
/// closures (braid and commutation relations preserve both length and
/// letter multiset up to the relations, so the closure is finite), and
/// codes are obtained by maximising over every representative and every
/// top-level split.  The oracle memoises closures and sub-codes, so
/// keeping one instance alive across a test run is much faster than
/// one-shot calls.
class BruteOracle {
 public:
  explicit BruteOracle(OracleBudget budget = {});

  /// Every positive word equal to w as a braid, ascending lexicographic.
  std::vector<PositiveBraidWord> enumerate_reps(const PositiveBraidWord& w);

  /// The lexicographically least representative of w.
  PositiveBraidWord canonical_rep(const PositiveBraidWord& w);

  /// Every top-level split of the literal word w into
  /// A_m ... A_0 X_1 ... X_{n-2} respecting the slots' letter sets, with
  /// A_m nonempty unless m = 0 and m <= length(w).
  std::vector<Tower> enumerate_towers(const PositiveBraidWord& w,
                                      const Arrangement& a);

  /// The maximal code over all representatives and splits, with the
  /// argmax word reassembled from the block braids' own brute-normal
  /// words.  Asserts that exactly one braid-level tower attains the
  /// maximum (InternalError otherwise).
  CNormalResult brute_cnormal(const PositiveBraidWord& b,
                              const Arrangement& a);

  /// The maximal right divisor of b with letters in S, found by scanning
  /// suffixes of every representative: a positive braid right-divides b
  /// within S exactly when some representative of b ends with a word for
  /// it in S (rewriting preserves the letter multiset up to the
  /// relations, so suffix scanning is complete).  Returns the divisor's
  /// least representative; asserts the divisibility maximum is unique.
  PositiveBraidWord brute_max_right_divisor(const PositiveBraidWord& b,
                                            const GeneratorSet& S);

  /// Searches words equal to w (free reduction, free insertion up to
  /// length |w| + budget, commutation and braid-relation triples) for a
  /// sigma-positive word: one whose least-index letter occurs only
  /// positively.  Absence is not a proof: the search is bounded both by
  /// the length budget and by the node budget.
  std::optional<BraidWord> sigma_positive_witness(const BraidWord& w,
                                                  int budget);

  /// One least representative per positive braid of word length <=
  /// max_len, ordered by (length, lexicographic).
  std::vector<PositiveBraidWord> enumerate_positive_braids(int strands,
                                                           int max_len);

 private:
  using Letters = std::vector<int>;
  struct ClosureKey {
    int strands;
    Letters letters;
    bool operator<(const ClosureKey& o) const {
      if (strands != o.strands) return strands < o.strands;
      return letters < o.letters;
    }
  };
  using ClosureSet = std::set<Letters>;

  OracleBudget budget_;
  std::map<ClosureKey, std::shared_ptr<const ClosureSet>> closures_;
  std::map<std::pair<Arrangement, Letters>, CNormalResult> code_memo_;

  std::shared_ptr<const ClosureSet> closure(int strands,
                                            const Letters& letters);
  /// brute_cnormal of the braid of `letters`, memoised by canonical
  /// representative.
  const CNormalResult& coded(int strands, const Arrangement& a,
                             const Letters& letters);

  struct Split {
    std::vector<std::pair<std::size_t, std::size_t>> a_ranges;  // A_0..A_m
    std::vector<std::pair<std::size_t, std::size_t>> x_ranges;  // X_1..X_{n-2}
  };
  std::vector<Split> enumerate_splits(const Letters& letters,
                                      const Arrangement& a) const;
};

}  // namespace braidorder

#endif  // BRAIDORDER_BRUTE_HPP
