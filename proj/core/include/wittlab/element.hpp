#pragma once

#include "wittlab/basis.hpp"
#include "wittlab/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace wittlab {

/// A finite formal linear combination of basis symbols with exact rational
/// coefficients. Zero coefficients are never stored; equality is
/// coefficient-wise. Elements are immutable values in practice: every
/// operation returns a new element.
class Element {
public:
  using TermMap = std::map<BasisSymbol, Rational>;

  Element() = default;

  static Element basis(BasisSymbol s) { return Element().add_term(s, 1); }
  static Element L(int m) { return basis(BasisSymbol::L(m)); }
  static Element I(int m) { return basis(BasisSymbol::I(m)); }
  static Element C1() { return basis(BasisSymbol::C1()); }
  static Element C2() { return basis(BasisSymbol::C2()); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of the symbol, 0 when absent.
  Rational coefficient(BasisSymbol s) const;

  /// Adds coeff * s, merging with an existing term and dropping exact
  /// zeros. Returns *this for chaining.
  Element& add_term(BasisSymbol s, const Rational& coeff);

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Rational& scalar);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Rational& scalar) { return lhs *= scalar; }
  friend Element operator*(const Rational& scalar, Element rhs) { return rhs *= scalar; }

  friend bool operator==(const Element&, const Element&) = default;

private:
  TermMap terms_;
};

/// True when every symbol of x exists in the algebra.
bool element_valid(const Element& x, AlgebraKind kind);

/// Text format, round-trip exact: terms joined by `+`/`-`, each term
/// `[coeff*]SYM` with SYM one of L[m], I[m], C1, C2 (or C for w22) and
/// coeff a nonnegative `p` or `p/q`; signs live on the joiners. The zero
/// element prints and parses as "0". Whitespace is insignificant.
/// Terms print in display order (L, I, centrals; indices ascending).
std::string to_text(const Element& x, AlgebraKind kind = AlgebraKind::wtilde);

/// Parses the text format, validating every symbol against the algebra.
/// Throws std::invalid_argument with the offending position.
Element parse_element(std::string_view text, AlgebraKind kind);

}  // namespace wittlab
