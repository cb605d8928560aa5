#include "braidorder/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace braidorder {

namespace {

void check_size(int n) {
  if (n < 2) {
    throw StrandTooSmall("permutations need at least 2 positions, got " +
                         std::to_string(n));
  }
}

void check_gen(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside [1, " + std::to_string(n - 1) + "]");
  }
}

}  // namespace

Permutation::Permutation(int n) : n_(n), fwd_(n), inv_(n) {
  check_size(n);
  std::iota(fwd_.begin(), fwd_.end(), 0);
  std::iota(inv_.begin(), inv_.end(), 0);
}

Permutation::Permutation(int n, std::vector<int> fwd)
    : n_(n), fwd_(std::move(fwd)), inv_(n, -1) {
  check_size(n);
  if (static_cast<int>(fwd_.size()) != n) {
    throw IndexOutOfRange("forward table size does not match n");
  }
  for (int a = 0; a < n_; ++a) {
    int b = fwd_[a];
    if (b < 0 || b >= n_ || inv_[b] != -1) {
      throw IndexOutOfRange("forward table is not a permutation");
    }
    inv_[b] = a;
  }
}

Permutation Permutation::transposition(int n, int i) {
  check_size(n);
  check_gen(i, n);
  Permutation p(n);
  std::swap(p.fwd_[i - 1], p.fwd_[i]);
  std::swap(p.inv_[i - 1], p.inv_[i]);
  return p;
}

Permutation Permutation::half_twist(int n) {
  check_size(n);
  std::vector<int> fwd(n);
  for (int a = 0; a < n; ++a) fwd[a] = n - 1 - a;
  return Permutation(n, std::move(fwd));
}

bool Permutation::is_identity() const {
  for (int a = 0; a < n_; ++a) {
    if (fwd_[a] != a) return false;
  }
  return true;
}

bool Permutation::is_half_twist() const {
  for (int a = 0; a < n_; ++a) {
    if (fwd_[a] != n_ - 1 - a) return false;
  }
  return true;
}

void Permutation::apply_gen_right(int i) {
  check_gen(i, n_);
  int a1 = inv_[i - 1];
  int a2 = inv_[i];
  std::swap(fwd_[a1], fwd_[a2]);
  std::swap(inv_[i - 1], inv_[i]);
}

void Permutation::apply_gen_left(int i) {
  check_gen(i, n_);
  std::swap(fwd_[i - 1], fwd_[i]);
  inv_[fwd_[i - 1]] = i - 1;
  inv_[fwd_[i]] = i;
}

int Permutation::inversions() const {
  int count = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (fwd_[a] > fwd_[b]) ++count;
    }
  }
  return count;
}

PositiveBraidWord Permutation::word() const {
  Permutation p = *this;
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(inversions()));
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= n_ - 1; ++i) {
      if (p.left_descent(i)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    letters.push_back(descent);
    p.apply_gen_left(descent);
  }
  if (!p.is_identity()) {
    throw InternalError("descent peeling failed to reach the identity");
  }
  return PositiveBraidWord(n_, std::move(letters));
}

Permutation Permutation::inverse() const {
  return Permutation(n_, inv_);
}

Permutation then(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw StrandMismatch("composing permutations of sizes " +
                         std::to_string(p.size()) + " and " +
                         std::to_string(q.size()));
  }
  int n = p.size();
  std::vector<int> fwd(n);
  for (int a = 0; a < n; ++a) fwd[a] = q.fwd()[p.fwd()[a]];
  return Permutation(n, std::move(fwd));
}

namespace {

Permutation permutation_of_letters(int strands, const std::vector<int>& letters) {
  Permutation p(strands);
  for (int letter : letters) {
    p.apply_gen_right(letter < 0 ? -letter : letter);
  }
  return p;
}

}  // namespace

Permutation permutation_of(const BraidWord& w) {
  return permutation_of_letters(w.strands(), w.letters());
}

Permutation permutation_of(const PositiveBraidWord& w) {
  return permutation_of_letters(w.strands(), w.letters());
}

}  // namespace braidorder
