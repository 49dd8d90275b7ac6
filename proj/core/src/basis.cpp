#include "wittlab/basis.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wittlab {

std::string_view algebra_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::w: return "w";
    case AlgebraKind::wtilde: return "wtilde";
    case AlgebraKind::w22: return "w22";
  }
  throw std::logic_error("algebra_name: bad enum value");
}

AlgebraKind parse_algebra(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "w") return AlgebraKind::w;
  if (lower == "wtilde" || lower == "w~") return AlgebraKind::wtilde;
  if (lower == "w22" || lower == "w(2,2)") return AlgebraKind::w22;
  throw std::invalid_argument("unknown algebra '" + std::string(text) +
                              "' (expected w, wtilde or w22)");
}

bool symbol_valid(BasisSymbol s, AlgebraKind kind) {
  switch (s.kind) {
    case SymbolKind::l:
    case SymbolKind::i:
      return true;
    case SymbolKind::c1:
      return kind != AlgebraKind::w;
    case SymbolKind::c2:
      return kind == AlgebraKind::wtilde;
  }
  return false;
}

std::string symbol_name(BasisSymbol s, AlgebraKind kind) {
  switch (s.kind) {
    case SymbolKind::l: return "L[" + std::to_string(s.index) + "]";
    case SymbolKind::i: return "I[" + std::to_string(s.index) + "]";
    case SymbolKind::c1: return kind == AlgebraKind::w22 ? "C" : "C1";
    case SymbolKind::c2: return "C2";
  }
  throw std::logic_error("symbol_name: bad enum value");
}

bool display_less(BasisSymbol a, BasisSymbol b) {
  auto rank = [](SymbolKind k) {
    switch (k) {
      case SymbolKind::l: return 0;
      case SymbolKind::i: return 1;
      case SymbolKind::c1: return 2;
      case SymbolKind::c2: return 3;
    }
    return 4;
  };
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
  return a.index < b.index;
}

}  // namespace wittlab
