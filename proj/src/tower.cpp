#include "braidorder/tower.hpp"

#include <string>

#include "braidorder/cnormal.hpp"

namespace braidorder {

namespace {

void check_letters_within(const PositiveBraidWord& w, int lo, int hi,
                          const std::string& role) {
  for (int letter : w.letters()) {
    if (letter < lo || letter > hi) {
      throw MembershipViolation(role + " holds letter " +
                                std::to_string(letter) + " outside [" +
                                std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    }
  }
}

}  // namespace

Code code_from_tower(const Tower& t, const Arrangement& a) {
  int n = a.strands();
  if (t.word.strands() != n) {
    throw StrandMismatch("tower word on " + std::to_string(t.word.strands()) +
                         " strands with an arrangement on " +
                         std::to_string(n));
  }
  if (t.a_factors.empty()) {
    throw Error("towers carry at least the A_0 factor");
  }

  // The word must be the concatenation A_m ... A_0 X_1 ... X_{n-2}.
  std::vector<int> expected;
  for (auto p = t.a_factors.rbegin(); p != t.a_factors.rend(); ++p) {
    if (p->strands() != n) throw StrandMismatch("tower factor strand count");
    expected.insert(expected.end(), p->letters().begin(), p->letters().end());
  }
  for (const PositiveBraidWord& x : t.x_factors) {
    if (x.strands() != n) throw StrandMismatch("tower factor strand count");
    expected.insert(expected.end(), x.letters().begin(), x.letters().end());
  }
  if (expected != t.word.letters()) {
    throw Error("tower word differs from the concatenation of its factors");
  }

  if (n == 2) {
    if (!t.x_factors.empty()) {
      throw Error("towers on 2 strands have no tail blocks");
    }
    return Code::leaf(static_cast<long long>(t.word.length()));
  }
  if (t.x_factors.size() != static_cast<std::size_t>(n - 2)) {
    throw Error("towers on " + std::to_string(n) + " strands need " +
                std::to_string(n - 2) + " tail blocks, got " +
                std::to_string(t.x_factors.size()));
  }

  Code::Entries entries;
  int m = static_cast<int>(t.a_factors.size()) - 1;
  for (int p = m; p >= 1; --p) {
    PositiveBraidWord factor = t.a_factors[static_cast<std::size_t>(p)];
    bool even = p % 2 == 0;
    check_letters_within(factor, even ? 2 : 1, even ? n - 1 : n - 2,
                         "alternating factor " + std::to_string(p));
    if (even) factor = flip(factor);
    Code sub = cnormal_positive(with_strands(factor, n - 1),
                                Arrangement::trivial(n - 1))
                   .code;
    if (!sub.is_zero()) entries.emplace_back(p, sub);
  }

  check_letters_within(t.a_factors[0], 2, n - 1, "head factor");
  Code head =
      cnormal_positive(shift_down(t.a_factors[0], 1), derive_k0(a)).code;
  if (!head.is_zero()) entries.emplace_back(0, head);

  for (int j = 1; j <= n - 2; ++j) {
    BlockBounds bounds = block_bounds(a, j);
    const PositiveBraidWord& block = t.x_factors[static_cast<std::size_t>(j - 1)];
    check_letters_within(block, bounds.m, bounds.M - 1,
                         "tail block " + std::to_string(j));
    Code sub = cnormal_positive(
                   with_strands(shift_down(block, bounds.m - 1),
                                bounds.M - bounds.m + 1),
                   derive_kj(a, j))
                   .code;
    if (!sub.is_zero()) entries.emplace_back(-j, sub);
  }

  return Code::composite(a, std::move(entries));
}

}  // namespace braidorder
