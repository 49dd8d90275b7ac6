#pragma once

#include "wittlab/algebra.hpp"
#include "wittlab/linalg.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wittlab {

/// A linear map given by the images of window basis symbols. A symbol with
/// no stored image is *undefined* (outside the map's domain), which is
/// different from an explicitly zero image; applying the map to an element
/// supported on an undefined symbol throws rather than truncating.
class LinearMapWindow {
public:
  LinearMapWindow(AlgebraKind kind, Window window);

  AlgebraKind algebra() const { return algebra_; }
  const Window& window() const { return window_; }
  const std::map<BasisSymbol, Element>& images() const { return images_; }

  /// Declares s in the domain with the given image (zero allowed). The
  /// symbol and the image's support must be inside the window.
  void set_image(BasisSymbol s, Element image);

  bool defined(BasisSymbol s) const { return images_.contains(s); }
  const Element& image(BasisSymbol s) const;  // throws std::out_of_range

  /// Linear extension; throws std::domain_error when the element touches
  /// an undefined symbol.
  Element apply(const Element& x) const;

  LinearMapWindow& operator+=(const LinearMapWindow& rhs);  // same domain required
  LinearMapWindow& operator*=(const Rational& scalar);

  friend bool operator==(const LinearMapWindow& a, const LinearMapWindow& b) {
    return a.algebra_ == b.algebra_ && a.window_.bound() == b.window_.bound() &&
           a.images_ == b.images_;
  }

  /// Line-oriented text form: `MAP L[2] -> 0`, `MAP I[2] -> I[2]`.
  std::string to_text() const;
  static LinearMapWindow from_text(std::string_view text, AlgebraKind kind,
                                   Window window);

private:
  AlgebraKind algebra_;
  Window window_;
  std::map<BasisSymbol, Element> images_;
};

/// D([x,y]) - [x, D(y)] + [y, D(x)]; the zero element means the pair
/// satisfies the derivation law. The module action is the bracket for both
/// algebra-valued and I-valued maps, so one defect serves both. Throws
/// std::domain_error when D is undefined on a needed symbol.
Element derivation_defect(const LinearMapWindow& d, const Element& x, const Element& y);

/// The outer derivation: L(m) -> 0, I(m) -> I(m) on the whole window.
/// On wtilde the unique lift additionally sends C1 -> 0 and C2 -> C2.
LinearMapWindow make_outer_derivation(const Window& window,
                                      AlgebraKind kind = AlgebraKind::w);

enum class DerivationTarget { algebra_valued, i_valued };

struct DerivationSpaceReport {
  AlgebraKind algebra{AlgebraKind::w};
  DerivationTarget target{DerivationTarget::algebra_valued};
  int degree = 0;
  int window = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t derivation_dim = 0;
  std::size_t inner_dim = 0;
  std::size_t outer_dim = 0;
  std::vector<LinearMapWindow> outer_basis;
  std::vector<LinearMapWindow> inner_generators;
};

/// Windowed derivation space of one graded degree, modulo inner maps.
///
/// Unknowns: the image of every symbol s with |index(s)| <= N - |degree|
/// (central symbols always), constrained to the graded component
/// deg(s) + degree of the window — a degree-n map sends degree-m symbols
/// into degree m+n, so the grading is built into the unknown pattern.
/// Equations: the derivation law on every pair (x, y) of domain symbols
/// whose bracket is supported on domain symbols; pairs that escape are
/// dropped whole, never truncated. Inner maps are x -> [x, v] with v the
/// degree-matching window element (v in {L, I} of that degree for
/// algebra-valued targets, v = I(degree) for I-valued ones); generators
/// that vanish on the whole window are dropped.
///
/// The I-valued target is the W-module I, so it requires algebra w.
/// Requires N >= 3 and |degree| <= N - 2.
DerivationSpaceReport compute_der_space(AlgebraKind kind, DerivationTarget target,
                                        int degree, const Window& window);

struct HomReport {
  int window = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t dim = 0;
  std::vector<LinearMapWindow> basis;
};

/// Module homomorphisms f: I -> L over the action of W, windowed:
/// [L_n, f(I_m)] = f([L_n, I_m]) plus the compatibility
/// [I_m, f(I_n)] = f([I_m, I_n]) = 0. Expected dimension 0.
/// Requires N >= 3.
HomReport compute_hom_I_to_L(const Window& window);

struct DegreeZeroToImReport {
  int m = 0;
  Rational a;             // phi(L0) = a I(m)
  Rational b;             // phi(I0) = b I(m); the law forces b = 0
  Element inner_element;  // E = -(a/m) I(m)
  bool inner;             // phi = [ . , E] verified exactly
};

/// The two-unknown degree computation for derivations W_0 -> C I(m),
/// m != 0: the derivation law on [L0, I0] forces b = 0 and the solution
/// phi(L0) = a I(m) is inner via E = -(a/m) I(m). Throws on m = 0.
DegreeZeroToImReport verify_w0_derivations_inner(int m, const Rational& a = Rational(1));

}  // namespace wittlab
