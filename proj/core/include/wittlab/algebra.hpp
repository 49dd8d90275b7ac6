#pragma once

#include "wittlab/element.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace wittlab {

/// Finite truncation of the Z-graded basis: the window of bound N holds
/// every L(m), I(m) with |m| <= N plus whatever central symbols the
/// ambient algebra has. Solver entry points require N >= 3 (N >= 2 for
/// the cocycle decomposition); the constructor only insists on N >= 1.
class Window {
public:
  explicit Window(int bound);

  int bound() const { return bound_; }

  bool contains(BasisSymbol s) const;
  bool contains(const Element& x) const;

  /// All window symbols of the algebra in storage order
  /// (C1, C2, L(-N..N), I(-N..N)).
  std::vector<BasisSymbol> symbols(AlgebraKind kind) const;

private:
  int bound_;
};

/// The Lie bracket, extended bilinearly from the basis tables
///   [L(m), L(n)] = (m-n) L(m+n)            (+ central term),
///   [L(m), I(n)] = (m-n) I(m+n)            (+ central term),
///   [I(m), I(n)] = 0,   centrals bracket to zero,
/// where the central term is delta_{m+n,0} (m^3-m)/12 times C1 (LL) resp.
/// C2 (LI) in wtilde, both times the merged C in w22, and absent in w.
/// Throws std::invalid_argument when an argument uses a symbol the
/// algebra does not have.
Element bracket(const Element& x, const Element& y, AlgebraKind kind);

struct DegreeResult {
  enum class Kind { homogeneous, zero, mixed };
  Kind kind{Kind::zero};
  int degree{0};  // meaningful only for homogeneous

  bool is_homogeneous() const { return kind == Kind::homogeneous; }
  bool is_zero() const { return kind == Kind::zero; }
};

/// Degree of a homogeneous element (deg L(m) = deg I(m) = m, centrals in
/// degree 0); the zero element reports a distinct "zero" sentinel rather
/// than an arbitrary integer.
DegreeResult degree_of(const Element& x);

struct TriangularParts {
  Element negative, zero, positive;
};

/// Splits x into its negative-, zero- and positive-degree parts; the
/// three always sum back to x.
TriangularParts triangular_split(const Element& x);

/// The covering/quotient maps: (wtilde,w22) merges C1,C2 into C,
/// (wtilde,w) and (w22,w) kill the centre; identity on L, I. Any other
/// direction throws std::invalid_argument.
Element project(const Element& x, AlgebraKind from, AlgebraKind to);

struct JacobiViolation {
  BasisSymbol x, y, z;
  Element defect;
};

struct JacobiReport {
  AlgebraKind algebra{AlgebraKind::w};
  int window = 0;
  std::uint64_t triples_checked = 0;
  std::optional<JacobiViolation> first_violation;

  bool ok() const { return !first_violation.has_value(); }
};

/// Evaluates [[x,y],z] + [[y,z],x] + [[z,x],y] for every ordered basis
/// triple x < y < z in the window (storage order) and reports the first
/// nonzero sum, if any. Exact: a violation is any nonzero element, with
/// no tolerance.
JacobiReport check_jacobi(AlgebraKind kind, const Window& window);

/// Same sweep against a caller-supplied antisymmetric basis bracket
/// table; used to demonstrate that a corrupted table is detected.
using BasisBracketFn = std::function<Element(BasisSymbol, BasisSymbol)>;
JacobiReport check_jacobi_table(const BasisBracketFn& table,
                                const std::vector<BasisSymbol>& symbols);

}  // namespace wittlab
