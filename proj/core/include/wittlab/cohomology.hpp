#pragma once

#include "wittlab/algebra.hpp"
#include "wittlab/linalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittlab {

/// An antisymmetric bilinear form given by exact values on ordered basis
/// pairs inside a window. Only pairs (s, t) with s < t in the storage
/// order are kept; psi(t, s) = -psi(s, t) and psi(s, s) = 0 are implicit,
/// and unstored pairs are zero. Evaluation extends bilinearly.
class BilinearFormWindow {
public:
  using PairKey = std::pair<BasisSymbol, BasisSymbol>;
  using PairMap = std::map<PairKey, Rational>;

  BilinearFormWindow(AlgebraKind kind, Window window);

  AlgebraKind algebra() const { return algebra_; }
  const Window& window() const { return window_; }
  const PairMap& pairs() const { return values_; }
  bool is_zero_form() const { return values_.empty(); }

  /// Stores psi(s, t) = v, canonicalizing the orientation. Throws
  /// std::invalid_argument for symbols the algebra lacks, s = t with
  /// nonzero value, or symbols outside the window.
  void set(BasisSymbol s, BasisSymbol t, const Rational& v);

  /// Antisymmetric lookup; throws std::domain_error when a symbol lies
  /// outside the window (values are never silently truncated to zero).
  Rational value(BasisSymbol s, BasisSymbol t) const;

  /// Bilinear evaluation; every support symbol of x and y must be inside
  /// the window, else std::domain_error.
  Rational evaluate(const Element& x, const Element& y) const;

  BilinearFormWindow operator-() const;
  BilinearFormWindow& operator+=(const BilinearFormWindow& rhs);
  BilinearFormWindow& operator-=(const BilinearFormWindow& rhs);
  BilinearFormWindow& operator*=(const Rational& scalar);

  friend BilinearFormWindow operator+(BilinearFormWindow a, const BilinearFormWindow& b) {
    return a += b;
  }
  friend BilinearFormWindow operator-(BilinearFormWindow a, const BilinearFormWindow& b) {
    return a -= b;
  }
  friend BilinearFormWindow operator*(BilinearFormWindow a, const Rational& s) {
    return a *= s;
  }

  friend bool operator==(const BilinearFormWindow& a, const BilinearFormWindow& b) {
    return a.algebra_ == b.algebra_ && a.window_.bound() == b.window_.bound() &&
           a.values_ == b.values_;
  }

  /// Line-oriented text form, one stored pair per line:
  /// `PAIR L[2] L[-2] = 1/2`. Round-trips through from_text.
  std::string to_text() const;
  static BilinearFormWindow from_text(std::string_view text, AlgebraKind kind,
                                      Window window);

private:
  AlgebraKind algebra_;
  Window window_;
  PairMap values_;
};

/// Linear functional given by its values on basis symbols (absent = 0).
class LinearFunctional {
public:
  LinearFunctional() = default;

  LinearFunctional& set(BasisSymbol s, const Rational& v);
  Rational operator()(BasisSymbol s) const;
  Rational evaluate(const Element& x) const;
  const std::map<BasisSymbol, Rational>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

private:
  std::map<BasisSymbol, Rational> values_;
};

/// Left-hand side of the cocycle identity
///   psi([x,y], z) + psi([y,z], x) + psi([z,x], y);
/// zero means the triple is compatible with psi being a 2-cocycle.
/// Throws std::domain_error if an argument or a bracket escapes the
/// window (never silently truncates).
Rational cocycle_defect(const BilinearFormWindow& psi, const Element& x,
                        const Element& y, const Element& z);

/// First window triple (in storage order) on which psi fails the cocycle
/// identity; triples whose brackets escape the window are skipped, not
/// truncated. nullopt when psi passes everywhere. This is the
/// precondition check of decompose_cocycle and the sweep used by the
/// verification suites.
std::optional<std::array<BasisSymbol, 3>> first_cocycle_violation(
    const BilinearFormWindow& psi);

/// The Virasoro-type cocycle on L-pairs:
/// alpha(L_m, L_n) = delta_{m+n,0} (m^3-m)/12, zero elsewhere.
BilinearFormWindow make_alpha(const Window& window);

/// The mixed L-I cocycle:
/// beta(L_m, I_n) = delta_{m+n,0} (m^3-m)/12, zero elsewhere.
BilinearFormWindow make_beta(const Window& window);

/// psi_f(s, t) = f([s, t]) for window pairs whose bracket stays inside
/// the window; pairs with escaping brackets are simply not stored.
BilinearFormWindow coboundary_of(const LinearFunctional& f, AlgebraKind kind,
                                 const Window& window);

struct H2Report {
  AlgebraKind algebra{AlgebraKind::w};
  int window = 0;
  int degree = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t h2_dim = 0;
  std::vector<BilinearFormWindow> representatives;
};

/// Windowed second cohomology in one graded degree.
///
/// Unknowns are the values psi(s, t) on ordered window pairs with
/// deg s + deg t = degree. The cocycle identity is imposed for every
/// basis triple whose three pairwise brackets stay inside the window
/// (equation-window discipline: a triple whose bracket escapes is dropped
/// entirely, never truncated). The kernel is computed exactly, then
/// quotiented by the span of the coboundaries psi_f with f supported on
/// the window symbols of the matching degree.
///
/// Degree-0 representatives are canonicalized to vanish at (L1, L-1) and
/// (L1, I-1), matching alpha and beta. Requires N >= 3.
H2Report compute_h2_window(AlgebraKind kind, const Window& window, int degree = 0);

struct BgvReport {
  int window = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t dim = 0;
  std::vector<BilinearFormWindow> basis;
};

/// The invariant-form space on the I-module: antisymmetric f(I_j, I_k)
/// with (i-j) f(I_{i+j}, I_k) + (k-i) f(I_{k+i}, I_j) = 0 imposed for
/// every instance whose evaluation indices stay inside the window.
/// The expected dimension is 0. Requires N >= 3.
BgvReport compute_bgv_window(const Window& window);

struct CocycleDecomposition {
  Rational alpha_coeff;
  Rational beta_coeff;
  LinearFunctional coboundary_function;  // supported on L0, I0
  BilinearFormWindow residual;

  bool in_span() const { return residual.is_zero_form(); }
};

/// Writes a degree-0 cocycle on w as
///   psi = alpha_coeff * alpha + beta_coeff * beta + psi_f + residual
/// with f read off the pinned pairs (L1, L-1), (L1, I-1) and the leading
/// coefficients off (L2, L-2), (L2, I-2); the reconstruction identity
/// holds on every window pair by construction and the residual is zero
/// exactly when psi lies in the span.
///
/// Preconditions (violations throw): psi lives on w with window >= 2, is
/// supported in degree 0, and passes the cocycle identity on every
/// admissible window triple — a failing triple is named in the exception.
CocycleDecomposition decompose_cocycle(const BilinearFormWindow& psi);

}  // namespace wittlab
