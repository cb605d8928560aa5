#include "braidorder/divisors.hpp"

#include <algorithm>
#include <string>

namespace braidorder {

namespace {

void check_set(const GeneratorSet& S, int strands) {
  for (int i : S) {
    if (i < 1 || i > strands - 1) {
      throw IndexOutOfRange("generator index " + std::to_string(i) +
                            " outside [1, " + std::to_string(strands - 1) +
                            "]");
    }
  }
}

}  // namespace

PositiveBraidWord peel_max_right_divisor(RightWeightedForm& form,
                                         const GeneratorSet& S) {
  check_set(S, form.strands());
  std::vector<int> peeled;
  for (;;) {
    int chosen = 0;
    for (int i : S) {
      if (form.divisible_by(i)) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) break;
    form.divide_by(chosen);
    peeled.push_back(chosen);
  }
  // b = remainder * sigma_{r_k} * ... * sigma_{r_1} for peel order r_1..r_k,
  // so the divisor's word is the peel order reversed.
  std::reverse(peeled.begin(), peeled.end());
  return PositiveBraidWord(form.strands(), std::move(peeled));
}

PositiveBraidWord max_right_divisor(const PositiveBraidWord& b,
                                    const GeneratorSet& S) {
  RightWeightedForm form(b);
  return peel_max_right_divisor(form, S);
}

PositiveBraidWord max_right_divisor_with_policy(
    const PositiveBraidWord& b, const GeneratorSet& S,
    const std::function<int(const std::vector<int>&)>& pick) {
  check_set(S, b.strands());
  RightWeightedForm form(b);
  std::vector<int> peeled;
  for (;;) {
    std::vector<int> eligible;
    for (int i : S) {
      if (form.divisible_by(i)) eligible.push_back(i);
    }
    if (eligible.empty()) break;
    int chosen = pick(eligible);
    if (std::find(eligible.begin(), eligible.end(), chosen) ==
        eligible.end()) {
      throw InternalError("peel policy chose an ineligible generator");
    }
    form.divide_by(chosen);
    peeled.push_back(chosen);
  }
  std::reverse(peeled.begin(), peeled.end());
  return PositiveBraidWord(b.strands(), std::move(peeled));
}

}  // namespace braidorder
