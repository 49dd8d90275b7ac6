#include "wittlab/algebra.hpp"

#include <stdexcept>
#include <string>

namespace wittlab {

Window::Window(int bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("Window: bound must be >= 1");
}

bool Window::contains(BasisSymbol s) const {
  if (s.is_central()) return true;
  return s.index >= -bound_ && s.index <= bound_;
}

bool Window::contains(const Element& x) const {
  for (const auto& [s, c] : x.terms()) {
    if (!contains(s)) return false;
  }
  return true;
}

std::vector<BasisSymbol> Window::symbols(AlgebraKind kind) const {
  std::vector<BasisSymbol> out;
  out.reserve(2 * (2 * static_cast<std::size_t>(bound_) + 1) + 2);
  if (kind != AlgebraKind::w) out.push_back(BasisSymbol::C1());
  if (kind == AlgebraKind::wtilde) out.push_back(BasisSymbol::C2());
  for (int m = -bound_; m <= bound_; ++m) out.push_back(BasisSymbol::L(m));
  for (int m = -bound_; m <= bound_; ++m) out.push_back(BasisSymbol::I(m));
  return out;
}

namespace {

// (m^3 - m)/12, the coefficient of the central term at m + n = 0.
Rational central_coefficient(int m) {
  BigInt mm(m);
  return Rational(mm * mm * mm - mm, 12);
}

Element basis_bracket(BasisSymbol a, BasisSymbol b, AlgebraKind kind) {
  if (a.is_central() || b.is_central() || a == b) return Element{};
  if (a.kind == SymbolKind::i && b.kind == SymbolKind::i) return Element{};
  // reduce to the L-first orientation
  if (a.kind == SymbolKind::i && b.kind == SymbolKind::l) {
    return -basis_bracket(b, a, kind);
  }
  const int m = a.index;
  const int n = b.index;
  Element out;
  if (b.kind == SymbolKind::l) {
    if (a.kind != SymbolKind::l) throw std::logic_error("basis_bracket: bad kinds");
    out.add_term(BasisSymbol::L(m + n), Rational(m - n));
    if (m + n == 0 && kind != AlgebraKind::w) {
      out.add_term(BasisSymbol::C1(), central_coefficient(m));
    }
    return out;
  }
  // [L(m), I(n)]
  out.add_term(BasisSymbol::I(m + n), Rational(m - n));
  if (m + n == 0) {
    if (kind == AlgebraKind::wtilde) {
      out.add_term(BasisSymbol::C2(), central_coefficient(m));
    } else if (kind == AlgebraKind::w22) {
      out.add_term(BasisSymbol::C1(), central_coefficient(m));
    }
  }
  return out;
}

void require_valid(const Element& x, AlgebraKind kind, const char* who) {
  for (const auto& [s, c] : x.terms()) {
    if (!symbol_valid(s, kind)) {
      throw std::invalid_argument(std::string(who) + ": symbol " +
                                  symbol_name(s, AlgebraKind::wtilde) +
                                  " is not part of algebra " +
                                  std::string(algebra_name(kind)));
    }
  }
}

}  // namespace

Element bracket(const Element& x, const Element& y, AlgebraKind kind) {
  require_valid(x, kind, "bracket");
  require_valid(y, kind, "bracket");
  Element out;
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      Element b = basis_bracket(sx, sy, kind);
      if (b.is_zero()) continue;
      out += b * (cx * cy);
    }
  }
  return out;
}

DegreeResult degree_of(const Element& x) {
  if (x.is_zero()) return {DegreeResult::Kind::zero, 0};
  auto it = x.terms().begin();
  const int d = it->first.degree();
  for (++it; it != x.terms().end(); ++it) {
    if (it->first.degree() != d) return {DegreeResult::Kind::mixed, 0};
  }
  return {DegreeResult::Kind::homogeneous, d};
}

TriangularParts triangular_split(const Element& x) {
  TriangularParts out;
  for (const auto& [s, c] : x.terms()) {
    const int d = s.degree();
    if (d < 0) {
      out.negative.add_term(s, c);
    } else if (d == 0) {
      out.zero.add_term(s, c);
    } else {
      out.positive.add_term(s, c);
    }
  }
  return out;
}

Element project(const Element& x, AlgebraKind from, AlgebraKind to) {
  const bool supported = (from == AlgebraKind::wtilde && to == AlgebraKind::w22) ||
                         (from == AlgebraKind::wtilde && to == AlgebraKind::w) ||
                         (from == AlgebraKind::w22 && to == AlgebraKind::w);
  if (!supported) {
    throw std::invalid_argument("project: unsupported direction " +
                                std::string(algebra_name(from)) + " -> " +
                                std::string(algebra_name(to)));
  }
  require_valid(x, from, "project");
  Element out;
  for (const auto& [s, c] : x.terms()) {
    if (!s.is_central()) {
      out.add_term(s, c);
    } else if (to == AlgebraKind::w22) {
      out.add_term(BasisSymbol::C1(), c);  // C1 = C2 = C
    }
    // centrals die in w
  }
  return out;
}

namespace {

Element table_bracket_element(const BasisBracketFn& table, const Element& x,
                              BasisSymbol z) {
  Element out;
  for (const auto& [s, c] : x.terms()) {
    Element b = table(s, z);
    if (b.is_zero()) continue;
    out += b * c;
  }
  return out;
}

}  // namespace

JacobiReport check_jacobi_table(const BasisBracketFn& table,
                                const std::vector<BasisSymbol>& symbols) {
  JacobiReport report;
  const std::size_t n = symbols.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element xy = table(symbols[i], symbols[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        ++report.triples_checked;
        Element sum = table_bracket_element(table, xy, symbols[k]);
        sum += table_bracket_element(table, table(symbols[j], symbols[k]), symbols[i]);
        sum += table_bracket_element(table, table(symbols[k], symbols[i]), symbols[j]);
        if (!sum.is_zero()) {
          report.first_violation =
              JacobiViolation{symbols[i], symbols[j], symbols[k], std::move(sum)};
          return report;
        }
      }
    }
  }
  return report;
}

JacobiReport check_jacobi(AlgebraKind kind, const Window& window) {
  auto table = [kind](BasisSymbol a, BasisSymbol b) {
    return basis_bracket(a, b, kind);
  };
  JacobiReport report = check_jacobi_table(table, window.symbols(kind));
  report.algebra = kind;
  report.window = window.bound();
  return report;
}

}  // namespace wittlab
