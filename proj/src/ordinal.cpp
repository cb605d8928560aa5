#include "braidorder/ordinal.hpp"

#include <utility>

#include "braidorder/errors.hpp"

namespace braidorder {

Ordinal Ordinal::finite(std::uint64_t value) {
  if (value == 0) return Ordinal();
  return single(Ordinal(), value);
}

Ordinal Ordinal::single(Ordinal exponent, std::uint64_t coefficient) {
  if (coefficient == 0) {
    throw InternalError("Cantor terms carry positive coefficients");
  }
  std::vector<Term> terms;
  terms.emplace_back(std::move(exponent), coefficient);
  return from_terms(std::move(terms));
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].second == 0) {
      throw InternalError("Cantor terms carry positive coefficients");
    }
    if (i > 0 && ordinal_cmp(terms[i - 1].first, terms[i].first) !=
                     ComparisonResult::Greater) {
      throw InternalError("Cantor exponents must strictly decrease");
    }
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal plus(const Ordinal& x, const Ordinal& y) {
  if (y.is_zero()) return x;
  const Ordinal& lead = y.terms().front().first;
  // Terms of x with exponent below y's leading exponent are absorbed.
  std::vector<Ordinal::Term> terms;
  for (const Ordinal::Term& term : x.terms()) {
    if (ordinal_cmp(term.first, lead) == ComparisonResult::Less) {
      break;  // exponents strictly decrease, so the rest are absorbed too
    }
    terms.push_back(term);
  }
  std::size_t from = 0;
  if (!terms.empty() && terms.back().first == lead) {
    terms.back().second += y.terms().front().second;
    from = 1;
  }
  for (std::size_t i = from; i < y.terms().size(); ++i) {
    terms.push_back(y.terms()[i]);
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal omega_power_times(const Ordinal& g, const Ordinal& x) {
  std::vector<Ordinal::Term> terms;
  terms.reserve(x.terms().size());
  for (const Ordinal::Term& term : x.terms()) {
    // w^g * w^a * c = w^{g+a} * c; the shifted exponents stay strictly
    // decreasing because ordinal addition is strictly monotone on the
    // right argument.
    terms.emplace_back(plus(g, term.first), term.second);
  }
  return Ordinal::from_terms(std::move(terms));
}

ComparisonResult ordinal_cmp(const Ordinal& x, const Ordinal& y) {
  std::size_t common = std::min(x.terms().size(), y.terms().size());
  for (std::size_t i = 0; i < common; ++i) {
    ComparisonResult expcmp =
        ordinal_cmp(x.terms()[i].first, y.terms()[i].first);
    if (expcmp != ComparisonResult::Equal) return expcmp;
    if (x.terms()[i].second != y.terms()[i].second) {
      return x.terms()[i].second < y.terms()[i].second
                 ? ComparisonResult::Less
                 : ComparisonResult::Greater;
    }
  }
  if (x.terms().size() == y.terms().size()) return ComparisonResult::Equal;
  return x.terms().size() < y.terms().size() ? ComparisonResult::Less
                                             : ComparisonResult::Greater;
}

Ordinal code_to_ordinal(const Code& c) {
  if (c.is_leaf()) {
    return Ordinal::finite(static_cast<std::uint64_t>(c.leaf_value()));
  }
  int n = c.strands();
  Ordinal out;
  // Stored positions are strictly descending, so the slot weights strictly
  // descend and the sum below never truncates.
  for (const auto& [position, sub] : c.entries()) {
    int e = position + (n - 2);
    Ordinal weight =
        e == 0 ? Ordinal::zero()
               : Ordinal::single(Ordinal::finite(
                                     static_cast<std::uint64_t>(n - 3)),
                                 static_cast<std::uint64_t>(e));
    out = plus(out, omega_power_times(weight, code_to_ordinal(sub)));
  }
  return out;
}

std::string to_string(const Ordinal& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < x.terms().size(); ++i) {
    if (i) out += " + ";
    const auto& [exponent, coefficient] = x.terms()[i];
    if (exponent.is_zero()) {
      out += std::to_string(coefficient);
    } else {
      out += "w^(" + to_string(exponent) + ")*" + std::to_string(coefficient);
    }
  }
  return out;
}

}  // namespace braidorder
