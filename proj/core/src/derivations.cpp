#include "wittlab/derivations.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wittlab {

LinearMapWindow::LinearMapWindow(AlgebraKind kind, Window window)
    : algebra_(kind), window_(window) {}

void LinearMapWindow::set_image(BasisSymbol s, Element image) {
  if (!symbol_valid(s, algebra_) || !element_valid(image, algebra_)) {
    throw std::invalid_argument("LinearMapWindow::set_image: symbol not in algebra");
  }
  if (!window_.contains(s) || !window_.contains(image)) {
    throw std::domain_error("LinearMapWindow::set_image: outside the window");
  }
  images_[s] = std::move(image);
}

const Element& LinearMapWindow::image(BasisSymbol s) const {
  auto it = images_.find(s);
  if (it == images_.end()) {
    throw std::out_of_range("LinearMapWindow::image: map undefined on " +
                            symbol_name(s, AlgebraKind::wtilde));
  }
  return it->second;
}

Element LinearMapWindow::apply(const Element& x) const {
  Element out;
  for (const auto& [s, c] : x.terms()) {
    auto it = images_.find(s);
    if (it == images_.end()) {
      throw std::domain_error("LinearMapWindow::apply: map undefined on " +
                              symbol_name(s, AlgebraKind::wtilde));
    }
    out += it->second * c;
  }
  return out;
}

LinearMapWindow& LinearMapWindow::operator+=(const LinearMapWindow& rhs) {
  if (algebra_ != rhs.algebra_ || window_.bound() != rhs.window_.bound()) {
    throw std::invalid_argument("LinearMapWindow: algebra/window mismatch");
  }
  for (const auto& [s, img] : rhs.images_) {
    auto it = images_.find(s);
    if (it == images_.end()) {
      throw std::invalid_argument("LinearMapWindow: domain mismatch");
    }
    it->second += img;
  }
  return *this;
}

LinearMapWindow& LinearMapWindow::operator*=(const Rational& scalar) {
  for (auto& [s, img] : images_) img *= scalar;
  return *this;
}

std::string LinearMapWindow::to_text() const {
  std::string out;
  for (const auto& [s, img] : images_) {
    out += "MAP " + symbol_name(s, algebra_) + " -> " + wittlab::to_text(img, algebra_) + "\n";
  }
  return out;
}

LinearMapWindow LinearMapWindow::from_text(std::string_view text, AlgebraKind kind,
                                           Window window) {
  LinearMapWindow out(kind, window);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag, sym_text, arrow;
    if (!(ls >> tag >> sym_text >> arrow) || tag != "MAP" || arrow != "->") {
      throw std::invalid_argument("map parse error at line " + std::to_string(lineno));
    }
    std::string rest;
    std::getline(ls, rest);
    Element sym = parse_element(sym_text, kind);
    if (sym.term_count() != 1 || !(sym.terms().begin()->second == Rational(1))) {
      throw std::invalid_argument("map parse error at line " + std::to_string(lineno) +
                                  ": expected a bare basis symbol");
    }
    out.set_image(sym.terms().begin()->first, parse_element(rest, kind));
  }
  return out;
}

Element derivation_defect(const LinearMapWindow& d, const Element& x, const Element& y) {
  const AlgebraKind kind = d.algebra();
  Element out = d.apply(bracket(x, y, kind));
  out -= bracket(x, d.apply(y), kind);
  out += bracket(y, d.apply(x), kind);
  return out;
}

LinearMapWindow make_outer_derivation(const Window& window, AlgebraKind kind) {
  LinearMapWindow d(kind, window);
  for (BasisSymbol s : window.symbols(kind)) {
    switch (s.kind) {
      case SymbolKind::l:
        d.set_image(s, Element{});
        break;
      case SymbolKind::i:
        d.set_image(s, Element::basis(s));
        break;
      case SymbolKind::c1:
        d.set_image(s, Element{});
        break;
      case SymbolKind::c2:
        d.set_image(s, Element::C2());
        break;
    }
  }
  return d;
}

namespace {

struct UnknownTable {
  // flattened (domain symbol, image symbol) -> column
  std::vector<BasisSymbol> domain;
  std::map<BasisSymbol, std::vector<BasisSymbol>> image_symbols;
  std::map<std::pair<BasisSymbol, BasisSymbol>, std::size_t> column;
  std::size_t size = 0;

  void add(BasisSymbol s, std::vector<BasisSymbol> images) {
    domain.push_back(s);
    for (BasisSymbol t : images) column[{s, t}] = size++;
    image_symbols.emplace(s, std::move(images));
  }

  bool in_domain(BasisSymbol s) const { return image_symbols.contains(s); }
};

// image component of the window in degree d for the given target
std::vector<BasisSymbol> graded_image_symbols(AlgebraKind kind, DerivationTarget target,
                                              int image_degree) {
  std::vector<BasisSymbol> out;
  if (target == DerivationTarget::i_valued) {
    out.push_back(BasisSymbol::I(image_degree));
    return out;
  }
  out.push_back(BasisSymbol::L(image_degree));
  out.push_back(BasisSymbol::I(image_degree));
  if (image_degree == 0) {
    if (kind != AlgebraKind::w) out.push_back(BasisSymbol::C1());
    if (kind == AlgebraKind::wtilde) out.push_back(BasisSymbol::C2());
  }
  return out;
}

LinearMapWindow map_from_vector(const std::vector<Rational>& v, const UnknownTable& table,
                                AlgebraKind kind, const Window& window) {
  LinearMapWindow out(kind, window);
  for (BasisSymbol s : table.domain) {
    Element img;
    for (BasisSymbol t : table.image_symbols.at(s)) {
      const Rational& c = v[table.column.at({s, t})];
      if (!c.is_zero()) img.add_term(t, c);
    }
    out.set_image(s, std::move(img));
  }
  return out;
}

}  // namespace

DerivationSpaceReport compute_der_space(AlgebraKind kind, DerivationTarget target,
                                        int degree, const Window& window) {
  const int n = window.bound();
  if (n < 3) {
    throw std::invalid_argument("compute_der_space: window bound must be >= 3");
  }
  if (std::abs(degree) > n - 2) {
    throw std::invalid_argument("compute_der_space: |degree| must be <= N - 2");
  }
  if (target == DerivationTarget::i_valued && kind != AlgebraKind::w) {
    throw std::invalid_argument(
        "compute_der_space: the I-valued target is a module over algebra w only");
  }

  DerivationSpaceReport report;
  report.algebra = kind;
  report.target = target;
  report.degree = degree;
  report.window = n;

  UnknownTable table;
  for (BasisSymbol s : window.symbols(kind)) {
    if (!s.is_central() && std::abs(s.index) > n - std::abs(degree)) continue;
    table.add(s, graded_image_symbols(kind, target, s.degree() + degree));
  }
  report.unknowns = table.size;

  // derivation law on every admissible pair of domain symbols
  std::vector<std::map<std::size_t, Rational>> rows;
  auto add_unknown = [&](std::map<std::size_t, Rational>& row, std::size_t col,
                         const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = row.emplace(col, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) row.erase(it);
    }
  };
  const std::size_t dn = table.domain.size();
  for (std::size_t i = 0; i < dn; ++i) {
    const BasisSymbol x = table.domain[i];
    const Element ex = Element::basis(x);
    for (std::size_t j = i + 1; j < dn; ++j) {
      const BasisSymbol y = table.domain[j];
      const Element ey = Element::basis(y);
      const Element bxy = bracket(ex, ey, kind);
      bool admissible = true;
      for (const auto& [u, cu] : bxy.terms()) {
        if (!table.in_domain(u)) {
          admissible = false;
          break;
        }
      }
      if (!admissible) continue;

      // components of D([x,y]) - [x, D(y)] + [y, D(x)], one row per
      // target symbol
      std::map<BasisSymbol, std::map<std::size_t, Rational>> components;
      for (const auto& [u, cu] : bxy.terms()) {
        for (BasisSymbol t : table.image_symbols.at(u)) {
          add_unknown(components[t], table.column.at({u, t}), cu);
        }
      }
      for (BasisSymbol t : table.image_symbols.at(y)) {
        const Element bxt = bracket(ex, Element::basis(t), kind);
        for (const auto& [w, cw] : bxt.terms()) {
          add_unknown(components[w], table.column.at({y, t}), -cw);
        }
      }
      for (BasisSymbol t : table.image_symbols.at(x)) {
        const Element byt = bracket(ey, Element::basis(t), kind);
        for (const auto& [w, cw] : byt.terms()) {
          add_unknown(components[w], table.column.at({x, t}), cw);
        }
      }
      for (auto& [t, row] : components) {
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  report.equations = rows.size();

  NullspaceResult solutions = nullspace(matrix_from_sparse_rows(table.size, rows));
  report.derivation_dim = solutions.nullity();

  // inner maps x -> [x, v] for the degree-matching generators v
  std::vector<BasisSymbol> inner_vs;
  if (target == DerivationTarget::i_valued) {
    inner_vs.push_back(BasisSymbol::I(degree));
  } else {
    inner_vs.push_back(BasisSymbol::L(degree));
    inner_vs.push_back(BasisSymbol::I(degree));
    if (degree == 0 && kind != AlgebraKind::w) {
      inner_vs.push_back(BasisSymbol::C1());
      if (kind == AlgebraKind::wtilde) inner_vs.push_back(BasisSymbol::C2());
    }
  }
  std::vector<std::vector<Rational>> inner_vectors;
  for (BasisSymbol v : inner_vs) {
    const Element ev = Element::basis(v);
    std::vector<Rational> vec(table.size);
    bool nonzero = false;
    LinearMapWindow gen(kind, window);
    for (BasisSymbol s : table.domain) {
      Element img = bracket(Element::basis(s), ev, kind);
      for (const auto& [t, c] : img.terms()) {
        auto it = table.column.find({s, t});
        if (it == table.column.end()) {
          throw std::logic_error("compute_der_space: inner image escapes the pattern");
        }
        vec[it->second] = c;
        nonzero = true;
      }
      gen.set_image(s, std::move(img));
    }
    if (!nonzero) continue;  // degenerate generator (central v)
    inner_vectors.push_back(std::move(vec));
    report.inner_generators.push_back(std::move(gen));
  }

  RowSpace inner_span(table.size);
  for (const auto& v : inner_vectors) inner_span.insert(v);
  report.inner_dim = inner_span.rank();
  report.outer_dim = report.derivation_dim - report.inner_dim;

  RowSpace selection = inner_span;
  for (const auto& v : solutions.basis) {
    if (report.outer_basis.size() == report.outer_dim) break;
    if (selection.insert(v)) {
      report.outer_basis.push_back(map_from_vector(v, table, kind, window));
    }
  }
  return report;
}

HomReport compute_hom_I_to_L(const Window& window) {
  const int n = window.bound();
  if (n < 3) {
    throw std::invalid_argument("compute_hom_I_to_L: window bound must be >= 3");
  }
  HomReport report;
  report.window = n;

  // unknowns x_{m,k}: f(I_m) = sum_k x_{m,k} L_k
  auto col = [n](int m, int k) -> std::size_t {
    return static_cast<std::size_t>(m + n) * (2 * n + 1) + static_cast<std::size_t>(k + n);
  };
  const std::size_t unknowns = static_cast<std::size_t>(2 * n + 1) * (2 * n + 1);
  report.unknowns = unknowns;

  std::vector<std::map<std::size_t, Rational>> rows;
  auto add = [&](std::map<std::size_t, Rational>& row, std::size_t c, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = row.emplace(c, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    }
  };

  // equivariance [L_u, f(I_m)] = f([L_u, I_m]) = (u - m) f(I_{u+m}),
  // imposed when the right-hand side stays inside the window
  for (int u = -n; u <= n; ++u) {
    for (int m = -n; m <= n; ++m) {
      if (u != m && std::abs(u + m) > n) continue;
      std::map<int, std::map<std::size_t, Rational>> components;  // by L-index
      for (int k = -n; k <= n; ++k) {
        // [L_u, L_k] = (u - k) L_{u+k}
        add(components[u + k], col(m, k), Rational(u - k));
      }
      if (u != m) {
        for (int k = -n; k <= n; ++k) {
          add(components[k], col(u + m, k), Rational(-(u - m)));
        }
      }
      for (auto& [idx, row] : components) {
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }

  // compatibility 0 = f([I_u, I_m]) = [I_u, f(I_m)]: componentwise
  // (u - k) x_{m,k} = 0
  for (int u = -n; u <= n; ++u) {
    for (int m = -n; m <= n; ++m) {
      for (int k = -n; k <= n; ++k) {
        if (u == k) continue;
        std::map<std::size_t, Rational> row;
        add(row, col(m, k), Rational(u - k));
        rows.push_back(std::move(row));
      }
    }
  }
  report.equations = rows.size();

  NullspaceResult ns = nullspace(matrix_from_sparse_rows(unknowns, rows));
  report.dim = ns.nullity();
  for (const auto& v : ns.basis) {
    LinearMapWindow f(AlgebraKind::w, window);
    for (int m = -n; m <= n; ++m) {
      Element img;
      for (int k = -n; k <= n; ++k) {
        const Rational& c = v[col(m, k)];
        if (!c.is_zero()) img.add_term(BasisSymbol::L(k), c);
      }
      f.set_image(BasisSymbol::I(m), std::move(img));
    }
    report.basis.push_back(std::move(f));
  }
  return report;
}

DegreeZeroToImReport verify_w0_derivations_inner(int m, const Rational& a) {
  if (m == 0) {
    throw std::invalid_argument("verify_w0_derivations_inner: m must be nonzero");
  }
  DegreeZeroToImReport report;
  report.m = m;
  report.a = a;

  // phi(L0) = a I(m), phi(I0) = b I(m); the law on [L0, I0] = 0 reads
  // 0 = [phi(L0), I0] + [L0, phi(I0)] = b [L0, I(m)] = -m b I(m), so b = 0.
  report.b = Rational(0);
  report.inner_element = Element::basis(BasisSymbol::I(m)) * (-(a / Rational(m)));

  const Element phi_l0 = Element::basis(BasisSymbol::I(m)) * a;
  const Element phi_i0 = Element{};
  const Element via_l0 = bracket(Element::L(0), report.inner_element, AlgebraKind::w);
  const Element via_i0 = bracket(Element::I(0), report.inner_element, AlgebraKind::w);
  report.inner = via_l0 == phi_l0 && via_i0 == phi_i0;
  return report;
}

}  // namespace wittlab
