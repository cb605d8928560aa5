#include "braidorder/alternating.hpp"

#include <string>

#include "braidorder/divisors.hpp"
#include "braidorder/normal_form.hpp"

namespace braidorder {

namespace {

GeneratorSet range_set(int lo, int hi) {
  GeneratorSet out;
  for (int i = lo; i <= hi; ++i) out.insert(i);
  return out;
}

}  // namespace

AlternateDecomposition alternate_decomposition(const PositiveBraidWord& b) {
  int n = b.strands();
  if (n < 3) {
    throw StrandTooSmall(
        "alternating decompositions need at least 3 strands, got " +
        std::to_string(n));
  }
  const GeneratorSet upper = range_set(2, n - 1);  // omit sigma_1
  const GeneratorSet lower = range_set(1, n - 2);  // omit sigma_{n-1}
  RightWeightedForm form(b);
  std::vector<PositiveBraidWord> factors;
  factors.push_back(peel_max_right_divisor(form, upper));  // f_0, may be empty
  while (!form.empty()) {
    bool odd = factors.size() % 2 == 1;
    PositiveBraidWord factor =
        peel_max_right_divisor(form, odd ? lower : upper);
    if (factor.empty()) {
      // Impossible: a remainder with no divisor on either side is empty.
      throw InternalError("alternating sweep made no progress");
    }
    factors.push_back(std::move(factor));
  }
  return AlternateDecomposition{n, std::move(factors)};
}

PositiveBraidWord phi_normal_form(const PositiveBraidWord& b) {
  int n = b.strands();
  if (n == 2) return b;
  AlternateDecomposition alt = alternate_decomposition(b);
  std::size_t m = alt.factors.size() - 1;
  std::vector<int> letters;
  letters.reserve(b.length());
  for (std::size_t p = m; p >= 1; --p) {
    PositiveBraidWord factor = alt.factors[p];
    bool even = p % 2 == 0;
    if (even) factor = flip(factor);  // letters now within [1, n-2]
    PositiveBraidWord sub = phi_normal_form(with_strands(factor, n - 1));
    PositiveBraidWord part = with_strands(sub, n);
    if (even) part = flip(part);
    letters.insert(letters.end(), part.letters().begin(),
                   part.letters().end());
  }
  if (!alt.factors[0].empty()) {
    PositiveBraidWord sub = phi_normal_form(shift_down(alt.factors[0], 1));
    PositiveBraidWord part = shift_up(sub, 1);
    letters.insert(letters.end(), part.letters().begin(),
                   part.letters().end());
  }
  return PositiveBraidWord(n, std::move(letters));
}

TailTwistDecomposition tail_twist_decomposition(const PositiveBraidWord& b,
                                                const Arrangement& a) {
  int n = b.strands();
  if (n != a.strands()) {
    throw StrandMismatch("braid on " + std::to_string(n) +
                         " strands with an arrangement on " +
                         std::to_string(a.strands()));
  }
  if (n < 3) {
    throw StrandTooSmall("tail twists need at least 3 strands, got " +
                         std::to_string(n));
  }
  int k1 = a.k(1);
  GeneratorSet tail_set = range_set(1, n - 1);
  tail_set.erase(k1);

  RightWeightedForm form(b);
  PositiveBraidWord tail = peel_max_right_divisor(form, tail_set);
  PositiveBraidWord head = peel_max_right_divisor(form, range_set(2, n - 1));
  PositiveBraidWord main = form.to_word();

  // Split the tail into its blocks, outermost block first in peel order.
  std::vector<PositiveBraidWord> blocks(static_cast<std::size_t>(n - 2),
                                        PositiveBraidWord::identity(n));
  RightWeightedForm tail_form(tail);
  for (int j = n - 2; j >= 1; --j) {
    BlockBounds bounds = block_bounds(a, j);
    blocks[static_cast<std::size_t>(j - 1)] =
        peel_max_right_divisor(tail_form, range_set(bounds.m, bounds.M - 1));
  }
  if (!tail_form.empty()) {
    throw InternalError("tail blocks fail to exhaust the tail");
  }
  return TailTwistDecomposition{std::move(main), std::move(head),
                                std::move(blocks)};
}

}  // namespace braidorder
