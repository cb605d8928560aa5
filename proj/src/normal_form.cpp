#include "braidorder/normal_form.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace braidorder {

namespace detail {

FactorChain::FactorChain(int strands, Weighting weighting)
    : strands_(strands), weighting_(weighting) {
  if (strands < 2) {
    throw StrandTooSmall("factor chains need at least 2 strands, got " +
                         std::to_string(strands));
  }
}

void FactorChain::schedule(List::iterator it) {
  if (it == factors_.begin()) return;
  if (it->queued) return;
  it->queued = true;
  work_.push_back(it);
}

void FactorChain::unschedule(List::iterator it) {
  // Erasing a node that is still on the worklist would leave a dangling
  // iterator there; drop the entry first.
  if (!it->queued) return;
  for (auto w = work_.begin(); w != work_.end(); ++w) {
    if (*w == it) {
      work_.erase(w);
      break;
    }
  }
  it->queued = false;
}

bool FactorChain::stabilize_pair(Permutation& f, Permutation& g) const {
  // One atom move: (f, g) -> (f*s_i, s_i*g).  As braids this is an equality
  // exactly when the moved crossing leaves one side and enters the other:
  // left weighting moves i in L(g)\R(f) so f grows, right weighting moves
  // i in R(f)\L(g) so g grows.  The smallest eligible atom is taken each
  // time; the pair is weighted when no atom is eligible.
  bool changed = false;
  for (;;) {
    int atom = 0;
    if (weighting_ == Weighting::Left) {
      for (int i = 1; i <= strands_ - 1; ++i) {
        if (g.left_descent(i) && !f.right_descent(i)) {
          atom = i;
          break;
        }
      }
    } else {
      for (int i = 1; i <= strands_ - 1; ++i) {
        if (f.right_descent(i) && !g.left_descent(i)) {
          atom = i;
          break;
        }
      }
    }
    if (atom == 0) return changed;
    f.apply_gen_right(atom);
    g.apply_gen_left(atom);
    changed = true;
  }
}

void FactorChain::drain() {
  while (!work_.empty()) {
    List::iterator it = work_.front();
    work_.pop_front();
    it->queued = false;
    if (it == factors_.begin()) continue;
    List::iterator left = std::prev(it);
    if (!stabilize_pair(left->p, it->p)) continue;
    // The pair's braid product never vanishes, so at most the shrinking
    // side can reach the identity: the right element under left weighting,
    // the left element under right weighting.
    if (it->p.is_identity()) {
      List::iterator next = factors_.erase(it);
      if (next != factors_.end()) schedule(next);
      schedule(left);
    } else if (left->p.is_identity()) {
      unschedule(left);
      factors_.erase(left);
      schedule(it);
      List::iterator next = std::next(it);
      if (next != factors_.end()) schedule(next);
    } else {
      schedule(left);
      List::iterator next = std::next(it);
      if (next != factors_.end()) schedule(next);
    }
  }
}

void FactorChain::append_letter(int i) {
  factors_.emplace_back(Permutation::transposition(strands_, i));
  schedule(std::prev(factors_.end()));
  drain();
}

void FactorChain::append_word(const PositiveBraidWord& w) {
  if (w.strands() != strands_) {
    throw StrandMismatch("appending a B_" + std::to_string(w.strands()) +
                         " word to a B_" + std::to_string(strands_) +
                         " chain");
  }
  for (int letter : w.letters()) {
    factors_.emplace_back(Permutation::transposition(strands_, letter));
    schedule(std::prev(factors_.end()));
  }
  drain();
}

bool FactorChain::divisible_by(int i) const {
  if (weighting_ != Weighting::Right) {
    throw InternalError("divisibility lookups need a right-weighted chain");
  }
  if (i < 1 || i > strands_ - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside [1, " + std::to_string(strands_ - 1) +
                          "]");
  }
  if (factors_.empty()) return false;
  // The final factor of a right-weighted sequence is the maximal simple
  // right divisor, so sigma_i divides the braid iff it divides that factor.
  return factors_.back().p.right_descent(i);
}

void FactorChain::divide_by(int i) {
  if (!divisible_by(i)) {
    throw InternalError("dividing by sigma_" + std::to_string(i) +
                        " which is not a right divisor");
  }
  List::iterator last = std::prev(factors_.end());
  last->p.apply_gen_right(i);  // removes one crossing: i was a right descent
  if (last->p.is_identity()) {
    factors_.erase(last);
  } else {
    schedule(last);
  }
  drain();
}

std::vector<Permutation> FactorChain::factors() const {
  std::vector<Permutation> out;
  out.reserve(factors_.size());
  for (const Node& node : factors_) out.push_back(node.p);
  return out;
}

PositiveBraidWord FactorChain::to_word() const {
  std::vector<int> letters;
  for (const Node& node : factors_) {
    const PositiveBraidWord w = node.p.word();
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return PositiveBraidWord(strands_, std::move(letters));
}

}  // namespace detail

GreedyNormalForm::GreedyNormalForm(const PositiveBraidWord& w)
    : strands_(w.strands()) {
  detail::FactorChain chain(w.strands(), Weighting::Left);
  chain.append_word(w);
  factors_ = chain.factors();
}

PositiveBraidWord GreedyNormalForm::to_word() const {
  std::vector<int> letters;
  for (const Permutation& p : factors_) {
    const PositiveBraidWord w = p.word();
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return PositiveBraidWord(strands_, std::move(letters));
}

RightWeightedForm::RightWeightedForm(const PositiveBraidWord& w)
    : chain_(w.strands(), Weighting::Right) {
  chain_.append_word(w);
}

bool equal(const PositiveBraidWord& u, const PositiveBraidWord& v) {
  if (u.strands() != v.strands()) {
    throw StrandMismatch("equality across B_" + std::to_string(u.strands()) +
                         " and B_" + std::to_string(v.strands()));
  }
  return GreedyNormalForm(u) == GreedyNormalForm(v);
}

bool right_divides_gen(const PositiveBraidWord& b, int i) {
  if (i < 1 || i > b.strands() - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside [1, " + std::to_string(b.strands() - 1) +
                          "]");
  }
  return RightWeightedForm(b).divisible_by(i);
}

std::optional<PositiveBraidWord> right_quotient(const PositiveBraidWord& b,
                                                const PositiveBraidWord& d) {
  if (b.strands() != d.strands()) {
    throw StrandMismatch("quotient across B_" + std::to_string(b.strands()) +
                         " and B_" + std::to_string(d.strands()));
  }
  RightWeightedForm form(b);
  const std::vector<int>& letters = d.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (!form.divisible_by(*it)) return std::nullopt;
    form.divide_by(*it);
  }
  return form.to_word();
}

namespace {

/// The positive word for Delta^2 * sigma_i^{-1}, cached per (strands, i).
const std::vector<int>& inverse_clearing_word(int strands, int i) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<int>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(strands, i);
  auto found = cache.find(key);
  if (found != cache.end()) return found->second;
  const PositiveBraidWord full_twist = power(delta(strands), 2);
  std::optional<PositiveBraidWord> q = right_quotient(
      full_twist, PositiveBraidWord(strands, {i}));
  if (!q) {
    throw InternalError("generator fails to divide the full twist");
  }
  return cache.emplace(key, q->letters()).first->second;
}

}  // namespace

PositiveLift positive_lift(const BraidWord& w) {
  int n = w.strands();
  std::vector<int> letters;
  int exponent = 0;
  for (int letter : w.letters()) {
    if (letter > 0) {
      letters.push_back(letter);
    } else {
      // Replacing sigma_i^{-1} by (Delta^2 sigma_i^{-1}) in place multiplies
      // the braid by one central full twist, so the result equals
      // Delta^{2p} * w with p the number of replacements.
      const std::vector<int>& rep = inverse_clearing_word(n, -letter);
      letters.insert(letters.end(), rep.begin(), rep.end());
      ++exponent;
    }
  }
  return PositiveLift{PositiveBraidWord(n, std::move(letters)), exponent};
}

}  // namespace braidorder
