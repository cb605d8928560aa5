#include "braidorder/code.hpp"

#include <algorithm>

namespace braidorder {

Code Code::leaf(long long value) {
  if (value < 0) {
    throw IndexOutOfRange("leaf codes hold nonnegative counts, got " +
                          std::to_string(value));
  }
  return Code(Arrangement::trivial(2), value, {});
}

Code Code::composite(const Arrangement& a, Entries entries) {
  if (a.strands() < 3) {
    throw StrandTooSmall("composite codes need at least 3 strands");
  }
  int n = a.strands();
  int previous_position = 0;
  bool first = true;
  for (const auto& [position, sub] : entries) {
    if (position < -(n - 2)) {
      throw IndexOutOfRange("code position " + std::to_string(position) +
                            " below -(n-2)");
    }
    if (!first && position >= previous_position) {
      throw IndexOutOfRange("code positions must strictly descend");
    }
    first = false;
    previous_position = position;
    if (sub.is_zero()) {
      throw IndexOutOfRange("zero sub-codes must not be stored");
    }
    auto [slot_strands, slot_arrangement] = braidorder::slot_context(a, position);
    if (sub.strands() != slot_strands ||
        sub.arrangement() != slot_arrangement) {
      throw ContextMismatch("sub-code context differs from its slot at position " +
                            std::to_string(position));
    }
  }
  return Code(a, 0, std::move(entries));
}

long long Code::leaf_value() const {
  if (!is_leaf()) throw InternalError("leaf_value on a composite code");
  return value_;
}

const Code::Entries& Code::entries() const {
  if (is_leaf()) throw InternalError("entries on a leaf code");
  return entries_;
}

bool Code::is_zero() const {
  return is_leaf() ? value_ == 0 : entries_.empty();
}

Code Code::at(int position) const {
  if (is_leaf()) throw InternalError("slot lookup on a leaf code");
  for (const auto& [stored_position, sub] : entries_) {
    if (stored_position == position) return sub;
    if (stored_position < position) break;  // descending order
  }
  auto [slot_strands, slot_arrangement] = slot_context(position);
  return zero_code(slot_strands, slot_arrangement);
}

std::pair<int, Arrangement> Code::slot_context(int position) const {
  return braidorder::slot_context(arrangement_, position);
}

bool Code::operator==(const Code& o) const {
  if (arrangement_ != o.arrangement_) return false;
  if (is_leaf()) return value_ == o.value_;
  return entries_ == o.entries_;
}

Code zero_code(int strands, const Arrangement& a) {
  if (strands == 2) return Code::leaf(0);
  return Code::composite(a, {});
}

std::pair<int, Arrangement> slot_context(const Arrangement& a, int position) {
  int n = a.strands();
  if (n < 3) {
    throw StrandTooSmall("slot contexts exist only on 3 or more strands");
  }
  if (position >= 1) {
    return {n - 1, Arrangement::trivial(n - 1)};
  }
  if (position == 0) {
    return {n - 1, derive_k0(a)};
  }
  int j = -position;
  if (j > n - 2) {
    throw IndexOutOfRange("code position " + std::to_string(position) +
                          " below -(n-2)");
  }
  BlockBounds bounds = block_bounds(a, j);
  return {bounds.M - bounds.m + 1, derive_kj(a, j)};
}

namespace {

void check_same_context(const Code& x, const Code& y) {
  if (x.strands() != y.strands() || x.arrangement() != y.arrangement()) {
    throw ContextMismatch("comparing codes from different contexts");
  }
}

int top_nonzero_position(const Code& c) {
  // Entries are descending and nonzero; the scan start also covers slot 0
  // and below even when everything is zero.
  if (c.entries().empty()) return 0;
  return std::max(c.entries().front().first, 0);
}

ComparisonResult compare_values(long long a, long long b) {
  if (a < b) return ComparisonResult::Less;
  if (a > b) return ComparisonResult::Greater;
  return ComparisonResult::Equal;
}

}  // namespace

ComparisonResult cmp_left(const Code& x, const Code& y) {
  check_same_context(x, y);
  if (x.is_leaf()) return compare_values(x.leaf_value(), y.leaf_value());
  int n = x.strands();
  int top = std::max(top_nonzero_position(x), top_nonzero_position(y));
  for (int position = top; position >= -(n - 2); --position) {
    ComparisonResult r = cmp_left(x.at(position), y.at(position));
    if (r != ComparisonResult::Equal) return r;
  }
  return ComparisonResult::Equal;
}

ComparisonResult cmp_right(const Code& x, const Code& y) {
  check_same_context(x, y);
  if (x.is_leaf()) return compare_values(x.leaf_value(), y.leaf_value());
  int n = x.strands();
  int top = std::max(top_nonzero_position(x), top_nonzero_position(y));
  for (int position = -(n - 2); position <= top; ++position) {
    ComparisonResult r = cmp_right(x.at(position), y.at(position));
    if (r != ComparisonResult::Equal) return r;
  }
  return ComparisonResult::Equal;
}

namespace {

std::string render(const Code& c, bool parent_is_three_strand) {
  if (c.is_leaf()) {
    std::string value = std::to_string(c.leaf_value());
    return parent_is_three_strand ? value : "(" + value + ")";
  }
  if (c.is_zero()) return "(0)";
  int n = c.strands();
  std::string out = "(";
  int top = std::max(top_nonzero_position(c), 0);
  for (int position = top; position >= -(n - 2); --position) {
    if (position != top) out += ",";
    out += render(c.at(position), n == 3);
  }
  out += ")";
  return out;
}

}  // namespace

std::string to_string(const Code& c) { return render(c, false); }

}  // namespace braidorder
