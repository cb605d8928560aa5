#include "braidorder/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidorder {

Arrangement::Arrangement(int strands, std::vector<int> k)
    : strands_(strands), k_(std::move(k)) {
  if (strands_ < 2) {
    throw StrandTooSmall("arrangements need at least 2 strands, got " +
                         std::to_string(strands_));
  }
  if (static_cast<int>(k_.size()) != strands_ - 1) {
    throw IndexOutOfRange("arrangement on " + std::to_string(strands_) +
                          " strands needs " + std::to_string(strands_ - 1) +
                          " entries, got " + std::to_string(k_.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(strands_), false);
  for (int value : k_) {
    if (value < 1 || value > strands_ - 1 || seen[value]) {
      throw IndexOutOfRange("arrangement entries must be a permutation of 1.." +
                            std::to_string(strands_ - 1));
    }
    seen[value] = true;
  }
}

Arrangement Arrangement::trivial(int strands) {
  std::vector<int> k(static_cast<std::size_t>(strands - 1));
  std::iota(k.begin(), k.end(), 1);
  return Arrangement(strands, std::move(k));
}

int Arrangement::k(int i) const {
  if (i < 1 || i > strands_ - 1) {
    throw IndexOutOfRange("arrangement index " + std::to_string(i) +
                          " outside [1, " + std::to_string(strands_ - 1) +
                          "]");
  }
  return k_[static_cast<std::size_t>(i - 1)];
}

BlockBounds block_bounds(const Arrangement& a, int j) {
  int n = a.strands();
  if (j < 1 || j > n - 2) {
    throw IndexOutOfRange("block index " + std::to_string(j) +
                          " outside [1, " + std::to_string(n - 2) + "]");
  }
  int pivot = a.k(j + 1);
  int m = 1;
  int M = n;
  for (int i = 1; i <= j; ++i) {
    int value = a.k(i);
    if (value < pivot) m = std::max(m, value + 1);
    if (value > pivot) M = std::min(M, value);
  }
  if (!(1 <= m && m < M && M <= n)) {
    throw InternalError("block bounds out of order");
  }
  return BlockBounds{j, m, M};
}

Arrangement derive_k0(const Arrangement& a) {
  std::vector<int> k;
  k.reserve(a.entries().size());
  for (int value : a.entries()) {
    if (value > 1) k.push_back(value - 1);
  }
  return Arrangement(a.strands() - 1, std::move(k));
}

Arrangement derive_kj(const Arrangement& a, int j) {
  BlockBounds bounds = block_bounds(a, j);
  std::vector<int> k;
  for (int i = j + 1; i <= a.strands() - 1; ++i) {
    int value = a.k(i);
    if (bounds.m <= value && value <= bounds.M - 1) {
      k.push_back(value - (bounds.m - 1));
    }
  }
  return Arrangement(bounds.M - bounds.m + 1, std::move(k));
}

std::string to_string(const Arrangement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.entries()[i]);
  }
  return out;
}

Arrangement parse_arrangement(const std::string& text, int strands) {
  std::vector<int> k;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error("cannot parse arrangement entry '" + token + "'");
    }
    if (used != token.size()) {
      throw Error("cannot parse arrangement entry '" + token + "'");
    }
    k.push_back(value);
  }
  return Arrangement(strands, std::move(k));
}

}  // namespace braidorder
