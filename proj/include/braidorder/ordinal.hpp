#ifndef BRAIDORDER_ORDINAL_HPP
#define BRAIDORDER_ORDINAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidorder/code.hpp"

namespace braidorder {

/// An ordinal below epsilon_0 in Cantor normal form: a sum of terms
/// w^{e_1}*c_1 + ... + w^{e_k}*c_k with strictly decreasing ordinal
/// exponents e_i and positive integer coefficients c_i.  The empty sum is
/// zero; finite ordinals have the single exponent zero.
class Ordinal {
 public:
  using Term = std::pair<Ordinal, std::uint64_t>;

  Ordinal() = default;  // zero

  static Ordinal zero() { return Ordinal(); }
  static Ordinal finite(std::uint64_t value);
  /// w^{exponent} * coefficient (coefficient >= 1).
  static Ordinal single(Ordinal exponent, std::uint64_t coefficient);
  /// Assembles terms, checking the Cantor invariants (strictly decreasing
  /// exponents, positive coefficients).
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const Ordinal& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Term> terms_;
};

/// Ordinal sum x + y (not commutative: lower-exponent prefix terms of x
/// are absorbed by y's leading term).
Ordinal plus(const Ordinal& x, const Ordinal& y);

/// Left product w^{g} * x: shifts every exponent of x up by g, using left
/// distributivity of multiplication over the Cantor normal form.
Ordinal omega_power_times(const Ordinal& g, const Ordinal& x);

/// Three-way order: compare terms lexicographically by (exponent,
/// coefficient); a proper prefix is smaller.
ComparisonResult ordinal_cmp(const Ordinal& x, const Ordinal& y);

/// The ordinal rank of a code: a leaf is its count; a composite with
/// entries C_p at positions p maps to the sum over stored positions, in
/// decreasing order, of w^{g_p} * rank(C_p), where the slot weight is
/// g_p = w^{n-3} * (p + n - 2) (zero when p = -(n-2)).  Strictly monotone
/// with respect to cmp_left within a context.
Ordinal code_to_ordinal(const Code& c);

/// Renders "0", bare coefficients for exponent zero, and "w^(E)*c"
/// otherwise, terms joined by " + ": e.g. "w^(3)*1 + w^(2)*1 + 1".
std::string to_string(const Ordinal& x);

}  // namespace braidorder

#endif  // BRAIDORDER_ORDINAL_HPP
