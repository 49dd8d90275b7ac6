#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace wittlab {

/// The three built-in algebras.
///   w      — basis {L(m), I(m)}, no central elements.
///   wtilde — the two-cocycle central extension of w, adds C1 and C2.
///   w22    — wtilde with C1 and C2 identified; the merged central element
///            is stored under the C1 slot and printed "C". C2 is forbidden.
enum class AlgebraKind { w, wtilde, w22 };

std::string_view algebra_name(AlgebraKind kind);

/// Accepts "w", "wtilde", "w22" (case-insensitive); throws
/// std::invalid_argument otherwise.
AlgebraKind parse_algebra(std::string_view text);

enum class SymbolKind : std::uint8_t { c1 = 0, c2 = 1, l = 2, i = 3 };

/// A basis symbol of the largest algebra in the family: L(m), I(m) for
/// m in Z, plus the central generators C1, C2.
///
/// The fixed total order (used for antisymmetric form storage and matrix
/// column ordering throughout) is
///     C1 < C2 < L(m) < L(m') for m < m' < I(n), ordered by index,
/// i.e. both centrals first, then every L by index, then every I by index.
/// The element text format displays terms in a different, more readable
/// order (L, I, then centrals); see display_less below.
struct BasisSymbol {
  SymbolKind kind{SymbolKind::c1};
  int index{0};  // always 0 for C1/C2

  static BasisSymbol L(int m) { return {SymbolKind::l, m}; }
  static BasisSymbol I(int m) { return {SymbolKind::i, m}; }
  static BasisSymbol C1() { return {SymbolKind::c1, 0}; }
  static BasisSymbol C2() { return {SymbolKind::c2, 0}; }

  bool is_central() const {
    return kind == SymbolKind::c1 || kind == SymbolKind::c2;
  }

  /// deg L(m) = deg I(m) = m; the centrals sit in degree 0.
  int degree() const { return is_central() ? 0 : index; }

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Whether the symbol exists in the given algebra (C2 does not exist in
/// w22, no central exists in w).
bool symbol_valid(BasisSymbol s, AlgebraKind kind);

/// "L[3]", "I[-1]", "C1", "C2"; the w22 central prints as "C".
std::string symbol_name(BasisSymbol s, AlgebraKind kind);

/// Ordering used by the text format only: L before I before C1 before C2,
/// indices ascending.
bool display_less(BasisSymbol a, BasisSymbol b);

}  // namespace wittlab
