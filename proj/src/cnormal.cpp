#include "braidorder/cnormal.hpp"

#include <utility>
#include <vector>

#include "braidorder/alternating.hpp"

namespace braidorder {

namespace {

void append_letters(std::vector<int>& out, const PositiveBraidWord& w) {
  out.insert(out.end(), w.letters().begin(), w.letters().end());
}

}  // namespace

CNormalResult cnormal_positive(const PositiveBraidWord& b,
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

  TailTwistDecomposition split = tail_twist_decomposition(b, a);
  AlternateDecomposition alt = alternate_decomposition(split.main);
  if (!alt.factors[0].empty()) {
    // The head peel already removed the maximal right divisor omitting
    // sigma_1, so the main part has none left.
    throw InternalError("main part retains a head-side divisor");
  }

  std::vector<int> letters;
  letters.reserve(b.length());
  Code::Entries entries;

  std::size_t m = alt.factors.size() - 1;
  for (std::size_t p = m; p >= 1; --p) {
    PositiveBraidWord factor = alt.factors[p];
    bool even = p % 2 == 0;
    if (even) factor = flip(factor);  // letters now within [1, n-2]
    CNormalResult sub = cnormal_positive(with_strands(factor, n - 1),
                                         Arrangement::trivial(n - 1));
    PositiveBraidWord part = with_strands(sub.word, n);
    if (even) part = flip(part);
    append_letters(letters, part);
    if (!sub.code.is_zero()) {
      entries.emplace_back(static_cast<int>(p), sub.code);
    }
  }

  CNormalResult head =
      cnormal_positive(shift_down(split.head, 1), derive_k0(a));
  append_letters(letters, shift_up(head.word, 1));
  if (!head.code.is_zero()) entries.emplace_back(0, head.code);

  for (int j = 1; j <= n - 2; ++j) {
    BlockBounds bounds = block_bounds(a, j);
    int down = bounds.m - 1;
    const PositiveBraidWord& block =
        split.blocks[static_cast<std::size_t>(j - 1)];
    CNormalResult sub = cnormal_positive(
        with_strands(shift_down(block, down), bounds.M - bounds.m + 1),
        derive_kj(a, j));
    append_letters(letters, with_strands(shift_up(sub.word, down), n));
    if (!sub.code.is_zero()) entries.emplace_back(-j, sub.code);
  }

  return CNormalResult{PositiveBraidWord(n, std::move(letters)),
                       Code::composite(a, std::move(entries))};
}

PositiveBraidWord tail_twisted_normal_form(const PositiveBraidWord& b,
                                           const Arrangement& a) {
  return cnormal_positive(b, a).word;
}

}  // namespace braidorder
