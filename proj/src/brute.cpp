#include "braidorder/brute.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

namespace braidorder {

namespace {

int abs_of(int v) { return v < 0 ? -v : v; }

bool adjacent_indices(int a, int b) {
  int d = abs_of(a) - abs_of(b);
  return d == 1 || d == -1;
}

bool commuting_indices(int a, int b) {
  int d = abs_of(a) - abs_of(b);
  return d >= 2 || d <= -2;
}

}  // namespace

BruteOracle::BruteOracle(OracleBudget budget) : budget_(budget) {}

std::shared_ptr<const BruteOracle::ClosureSet> BruteOracle::closure(
    int strands, const Letters& letters) {
  ClosureKey key{strands, letters};
  auto found = closures_.find(key);
  if (found != closures_.end()) return found->second;

  // Breadth-first closure under the length-preserving relation moves:
  // adjacent commutation (|i-j| >= 2) and the braid triple
  // (i, j, i) <-> (j, i, j) for |i-j| = 1.  These generate positive-word
  // equality, so the closure is exactly the representative set.
  auto set = std::make_shared<ClosureSet>();
  std::deque<Letters> queue;
  set->insert(letters);
  queue.push_back(letters);
  while (!queue.empty()) {
    Letters current = std::move(queue.front());
    queue.pop_front();
    std::size_t len = current.size();
    auto offer = [&](Letters&& next) {
      if (set->insert(next).second) {
        if (set->size() > budget_.max_closure) {
          throw BudgetExceeded("rewriting closure exceeds " +
                               std::to_string(budget_.max_closure) +
                               " words");
        }
        queue.push_back(std::move(next));
      }
    };
    for (std::size_t t = 0; t + 1 < len; ++t) {
      if (commuting_indices(current[t], current[t + 1])) {
        Letters next = current;
        std::swap(next[t], next[t + 1]);
        offer(std::move(next));
      }
    }
    for (std::size_t t = 0; t + 2 < len; ++t) {
      if (current[t] == current[t + 2] &&
          adjacent_indices(current[t], current[t + 1])) {
        Letters next = current;
        next[t] = current[t + 1];
        next[t + 1] = current[t];
        next[t + 2] = current[t + 1];
        offer(std::move(next));
      }
    }
  }

  // Every member shares the closure; store it under each so later lookups
  // of any representative are hits.
  for (const Letters& member : *set) {
    closures_.emplace(ClosureKey{strands, member}, set);
  }
  return set;
}

std::vector<PositiveBraidWord> BruteOracle::enumerate_reps(
    const PositiveBraidWord& w) {
  auto set = closure(w.strands(), w.letters());
  std::vector<PositiveBraidWord> out;
  out.reserve(set->size());
  for (const Letters& letters : *set) {
    out.emplace_back(w.strands(), letters);
  }
  return out;
}

PositiveBraidWord BruteOracle::canonical_rep(const PositiveBraidWord& w) {
  auto set = closure(w.strands(), w.letters());
  return PositiveBraidWord(w.strands(), *set->begin());
}

std::vector<BruteOracle::Split> BruteOracle::enumerate_splits(
    const Letters& letters, const Arrangement& a) const {
  int n = a.strands();
  std::size_t total = letters.size();
  std::vector<Split> out;

  if (n == 2) {
    Split whole;
    whole.a_ranges.emplace_back(0, total);
    out.push_back(std::move(whole));
    return out;
  }

  auto a_slot_admits = [&](int p, int letter) {
    bool upper = p == 0 || p % 2 == 0;
    return upper ? (2 <= letter && letter <= n - 1)
                 : (1 <= letter && letter <= n - 2);
  };
  std::vector<BlockBounds> bounds;
  for (int j = 1; j <= n - 2; ++j) bounds.push_back(block_bounds(a, j));

  // X side: consume letters[prefix..total) into blocks X_1..X_{n-2}.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> x_splits;
  std::vector<std::pair<std::size_t, std::size_t>> x_stack;
  auto gen_x = [&](auto&& self, int j, std::size_t pos) -> void {
    if (j == n - 1) {
      if (pos == total) x_splits.push_back(x_stack);
      return;
    }
    const BlockBounds& bb = bounds[static_cast<std::size_t>(j - 1)];
    for (std::size_t end = pos;; ++end) {
      x_stack.emplace_back(pos, end);
      self(self, j + 1, end);
      x_stack.pop_back();
      if (end == total) break;
      int letter = letters[end];
      if (letter < bb.m || letter > bb.M - 1) break;
    }
  };

  // A side: consume letters[0..prefix) from the right, A_0 first.
  std::vector<std::pair<std::size_t, std::size_t>> a_stack;  // A_0, A_1, ...
  std::size_t a_cap = total;  // towers are bounded by m <= length(word)
  auto gen_a = [&](auto&& self, std::size_t p, std::size_t end,
                   auto&& emit) -> void {
    for (std::size_t begin = end;; --begin) {
      a_stack.emplace_back(begin, end);
      if (begin == 0) {
        if (p == 0 || begin < end) emit();
      } else if (p < a_cap) {
        self(self, p + 1, begin, emit);
      }
      a_stack.pop_back();
      if (begin == 0) break;
      int letter = letters[begin - 1];
      if (!a_slot_admits(static_cast<int>(p), letter)) break;
    }
  };

  for (std::size_t prefix = 0; prefix <= total; ++prefix) {
    x_splits.clear();
    gen_x(gen_x, 1, prefix);
    if (x_splits.empty()) continue;
    auto emit = [&]() {
      for (const auto& xs : x_splits) {
        Split split;
        split.a_ranges = a_stack;
        split.x_ranges = xs;
        out.push_back(std::move(split));
      }
    };
    gen_a(gen_a, 0, prefix, emit);
  }
  return out;
}

std::vector<Tower> BruteOracle::enumerate_towers(const PositiveBraidWord& w,
                                                 const Arrangement& a) {
  if (w.strands() != a.strands()) {
    throw StrandMismatch("word on " + std::to_string(w.strands()) +
                         " strands with an arrangement on " +
                         std::to_string(a.strands()));
  }
  int n = a.strands();
  const Letters& letters = w.letters();
  std::vector<Tower> out;
  for (const Split& split : enumerate_splits(letters, a)) {
    Tower tower{w, {}, {}};
    for (const auto& [begin, end] : split.a_ranges) {
      tower.a_factors.emplace_back(
          n, Letters(letters.begin() + static_cast<std::ptrdiff_t>(begin),
                     letters.begin() + static_cast<std::ptrdiff_t>(end)));
    }
    for (const auto& [begin, end] : split.x_ranges) {
      tower.x_factors.emplace_back(
          n, Letters(letters.begin() + static_cast<std::ptrdiff_t>(begin),
                     letters.begin() + static_cast<std::ptrdiff_t>(end)));
    }
    out.push_back(std::move(tower));
  }
  return out;
}

const CNormalResult& BruteOracle::coded(int strands, const Arrangement& a,
                                        const Letters& letters) {
  Letters canon = *closure(strands, letters)->begin();
  auto key = std::make_pair(a, canon);
  auto found = code_memo_.find(key);
  if (found != code_memo_.end()) return found->second;
  CNormalResult result = brute_cnormal(PositiveBraidWord(strands, canon), a);
  return code_memo_.emplace(std::move(key), std::move(result)).first->second;
}

CNormalResult BruteOracle::brute_cnormal(const PositiveBraidWord& b,
                                         const Arrangement& a) {
  int n = a.strands();
  if (b.strands() != n) {
    throw StrandMismatch("braid on " + std::to_string(b.strands()) +
                         " strands with an arrangement on " +
                         std::to_string(n));
  }
  if (n == 2) {
    return CNormalResult{b, Code::leaf(static_cast<long long>(b.length()))};
  }

  struct Evaluated {
    Code code;
    Letters word;
  };
  // Evaluates one split of one representative: each block braid is coded
  // recursively in its slot context, and the word is reassembled from the
  // blocks' own brute-normal words, so the argmax word never depends on
  // which spelling of a block the representative used.
  auto evaluate = [&](const Letters& u, const Split& split) -> Evaluated {
    Code::Entries entries;
    Letters word;
    auto slice = [&](std::pair<std::size_t, std::size_t> range) {
      return Letters(u.begin() + static_cast<std::ptrdiff_t>(range.first),
                     u.begin() + static_cast<std::ptrdiff_t>(range.second));
    };
    int m = static_cast<int>(split.a_ranges.size()) - 1;
    for (int p = m; p >= 1; --p) {
      Letters part = slice(split.a_ranges[static_cast<std::size_t>(p)]);
      if (part.empty()) continue;
      bool even = p % 2 == 0;
      if (even) {
        for (int& letter : part) letter = n - letter;
      }
      const CNormalResult& sub =
          coded(n - 1, Arrangement::trivial(n - 1), part);
      Letters back = sub.word.letters();
      if (even) {
        for (int& letter : back) letter = n - letter;
      }
      word.insert(word.end(), back.begin(), back.end());
      if (!sub.code.is_zero()) entries.emplace_back(p, sub.code);
    }
    {
      Letters part = slice(split.a_ranges[0]);
      if (!part.empty()) {
        for (int& letter : part) letter -= 1;
        const CNormalResult& sub = coded(n - 1, derive_k0(a), part);
        Letters back = sub.word.letters();
        for (int& letter : back) letter += 1;
        word.insert(word.end(), back.begin(), back.end());
        if (!sub.code.is_zero()) entries.emplace_back(0, sub.code);
      }
    }
    for (int j = 1; j <= n - 2; ++j) {
      Letters part = slice(split.x_ranges[static_cast<std::size_t>(j - 1)]);
      if (part.empty()) continue;
      BlockBounds bb = block_bounds(a, j);
      for (int& letter : part) letter -= bb.m - 1;
      const CNormalResult& sub =
          coded(bb.M - bb.m + 1, derive_kj(a, j), part);
      Letters back = sub.word.letters();
      for (int& letter : back) letter += bb.m - 1;
      word.insert(word.end(), back.begin(), back.end());
      if (!sub.code.is_zero()) entries.emplace_back(-j, sub.code);
    }
    return Evaluated{Code::composite(a, std::move(entries)),
                     std::move(word)};
  };

  auto reps = closure(n, b.letters());
  std::optional<Evaluated> best;
  std::set<Letters> best_words;
  for (const Letters& u : *reps) {
    for (const Split& split : enumerate_splits(u, a)) {
      Evaluated ev = evaluate(u, split);
      if (!best) {
        best_words.insert(ev.word);
        best = std::move(ev);
        continue;
      }
      ComparisonResult r = cmp_right(ev.code, best->code);
      if (r == ComparisonResult::Greater) {
        best_words.clear();
        best_words.insert(ev.word);
        best = std::move(ev);
      } else if (r == ComparisonResult::Equal) {
        best_words.insert(ev.word);
      }
    }
  }
  if (!best) throw InternalError("no split evaluated");
  if (best_words.size() != 1) {
    throw InternalError("maximal code attained by " +
                        std::to_string(best_words.size()) +
                        " distinct towers");
  }
  return CNormalResult{PositiveBraidWord(n, *best_words.begin()),
                       best->code};
}

PositiveBraidWord BruteOracle::brute_max_right_divisor(
    const PositiveBraidWord& b, const GeneratorSet& S) {
  int n = b.strands();
  for (int i : S) {
    if (i < 1 || i > n - 1) {
      throw IndexOutOfRange("generator index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n - 1) + "]");
    }
  }

  // A braid in <S> right-divides b exactly when some representative of b
  // ends with one of its words; rewriting preserves membership of each
  // letter multiset class, so scanning representative suffixes is both
  // sound and complete.
  auto reps = closure(n, b.letters());
  std::set<Letters> candidates;
  for (const Letters& rep : *reps) {
    for (std::size_t s = 0; s <= rep.size(); ++s) {
      Letters suffix(rep.end() - static_cast<std::ptrdiff_t>(s), rep.end());
      bool inside = true;
      for (int letter : suffix) inside = inside && S.count(letter) > 0;
      if (!inside) continue;
      candidates.insert(*closure(n, suffix)->begin());
    }
  }

  std::size_t longest = 0;
  for (const Letters& c : candidates) longest = std::max(longest, c.size());
  std::vector<Letters> at_longest;
  for (const Letters& c : candidates) {
    if (c.size() == longest) at_longest.push_back(c);
  }
  if (at_longest.size() != 1) {
    throw InternalError("S-divisors have " +
                        std::to_string(at_longest.size()) +
                        " longest elements; the lattice maximum is unique");
  }
  const Letters& divisor = at_longest.front();

  // The maximum must absorb every candidate: each candidate right-divides
  // it, witnessed by a representative of the divisor ending with one of
  // the candidate's words.
  std::set<std::pair<std::size_t, Letters>> divisor_suffixes;
  for (const Letters& rep : *closure(n, divisor)) {
    for (std::size_t s = 0; s <= rep.size(); ++s) {
      Letters suffix(rep.end() - static_cast<std::ptrdiff_t>(s), rep.end());
      divisor_suffixes.emplace(s, *closure(n, suffix)->begin());
    }
  }
  for (const Letters& c : candidates) {
    if (!divisor_suffixes.count({c.size(), c})) {
      throw InternalError("an S-divisor escapes the longest S-divisor");
    }
  }
  return PositiveBraidWord(n, divisor);
}

namespace {

bool is_sigma_positive(const std::vector<int>& letters) {
  if (letters.empty()) return false;
  int least = 0;
  for (int letter : letters) {
    int index = abs_of(letter);
    if (least == 0 || index < least) least = index;
  }
  for (int letter : letters) {
    if (letter == -least) return false;
  }
  return true;
}

}  // namespace

std::optional<BraidWord> BruteOracle::sigma_positive_witness(
    const BraidWord& w, int budget) {
  if (budget < 0) {
    throw IndexOutOfRange("negative length budget " + std::to_string(budget));
  }
  int n = w.strands();
  std::size_t cap = w.length() + static_cast<std::size_t>(budget);

  std::set<Letters> visited;
  std::deque<Letters> queue;
  visited.insert(w.letters());
  queue.push_back(w.letters());

  while (!queue.empty()) {
    Letters current = std::move(queue.front());
    queue.pop_front();
    if (is_sigma_positive(current)) return BraidWord(n, current);
    if (visited.size() >= budget_.witness_nodes) {
      return std::nullopt;  // inconclusive: the budget ran out
    }
    std::size_t len = current.size();
    auto offer = [&](Letters&& next) {
      if (visited.insert(next).second) queue.push_back(std::move(next));
    };
    for (std::size_t t = 0; t + 1 < len; ++t) {
      if (current[t] == -current[t + 1]) {
        Letters next;
        next.reserve(len - 2);
        next.insert(next.end(), current.begin(),
                    current.begin() + static_cast<std::ptrdiff_t>(t));
        next.insert(next.end(),
                    current.begin() + static_cast<std::ptrdiff_t>(t + 2),
                    current.end());
        offer(std::move(next));
      }
      if (commuting_indices(current[t], current[t + 1])) {
        Letters next = current;
        std::swap(next[t], next[t + 1]);
        offer(std::move(next));
      }
    }
    for (std::size_t t = 0; t + 2 < len; ++t) {
      int a = current[t];
      int bmid = current[t + 1];
      int c = current[t + 2];
      if (!adjacent_indices(a, bmid)) continue;
      bool same_sign = (a > 0) == (bmid > 0);
      Letters next = current;
      if (c == a && same_sign) {
        // x y x = y x y for equal signs (the braid relation or its inverse).
        next[t] = bmid;
        next[t + 1] = a;
        next[t + 2] = bmid;
        offer(std::move(next));
      } else if (c == -a && same_sign) {
        // x y x^{-1} = y^{-1} x y.
        next[t] = -bmid;
        next[t + 1] = a;
        next[t + 2] = bmid;
        offer(std::move(next));
      } else if (c == -a && !same_sign) {
        // x y x^{-1} = y x y^{-1} when y has the opposite sign.
        next[t] = bmid;
        next[t + 1] = -a;
        next[t + 2] = -bmid;
        offer(std::move(next));
      }
    }
    if (len + 2 <= cap) {
      for (std::size_t t = 0; t <= len; ++t) {
        for (int g = 1; g <= n - 1; ++g) {
          for (int sign : {1, -1}) {
            Letters next;
            next.reserve(len + 2);
            next.insert(next.end(), current.begin(),
                        current.begin() + static_cast<std::ptrdiff_t>(t));
            next.push_back(sign * g);
            next.push_back(-sign * g);
            next.insert(next.end(),
                        current.begin() + static_cast<std::ptrdiff_t>(t),
                        current.end());
            offer(std::move(next));
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<PositiveBraidWord> BruteOracle::enumerate_positive_braids(
    int strands, int max_len) {
  if (strands < 2) {
    throw StrandTooSmall("enumeration needs at least 2 strands, got " +
                         std::to_string(strands));
  }
  if (max_len < 0) {
    throw IndexOutOfRange("negative maximal length " +
                          std::to_string(max_len));
  }
  std::vector<PositiveBraidWord> out;
  std::set<Letters> seen;
  std::size_t visited_words = 0;
  for (int len = 0; len <= max_len; ++len) {
    // Odometer over all words of this length, ascending lexicographically;
    // the first member of each closure met this way is its least word.
    Letters word(static_cast<std::size_t>(len), 1);
    for (;;) {
      if (++visited_words > budget_.max_words) {
        throw BudgetExceeded("enumeration exceeds " +
                             std::to_string(budget_.max_words) + " words");
      }
      if (!seen.count(word)) {
        auto set = closure(strands, word);
        for (const Letters& member : *set) seen.insert(member);
        out.emplace_back(strands, word);
      }
      // Advance the odometer.
      int position = len - 1;
      while (position >= 0 && word[static_cast<std::size_t>(position)] ==
                                  strands - 1) {
        word[static_cast<std::size_t>(position)] = 1;
        --position;
      }
      if (position < 0) break;
      ++word[static_cast<std::size_t>(position)];
    }
  }
  return out;
}

}  // namespace braidorder
