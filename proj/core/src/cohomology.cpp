#include "wittlab/cohomology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wittlab {

namespace {

Rational vir(int m) {
  BigInt mm(m);
  return Rational(mm * mm * mm - mm, 12);
}

[[noreturn]] void out_of_window(const char* who, BasisSymbol s) {
  throw std::domain_error(std::string(who) + ": symbol " +
                          symbol_name(s, AlgebraKind::wtilde) +
                          " is out of the window");
}

}  // namespace

BilinearFormWindow::BilinearFormWindow(AlgebraKind kind, Window window)
    : algebra_(kind), window_(window) {}

void BilinearFormWindow::set(BasisSymbol s, BasisSymbol t, const Rational& v) {
  if (!symbol_valid(s, algebra_) || !symbol_valid(t, algebra_)) {
    throw std::invalid_argument("BilinearFormWindow::set: symbol not in algebra");
  }
  if (!window_.contains(s)) out_of_window("BilinearFormWindow::set", s);
  if (!window_.contains(t)) out_of_window("BilinearFormWindow::set", t);
  if (s == t) {
    if (!v.is_zero()) {
      throw std::invalid_argument("BilinearFormWindow::set: psi(s, s) must be 0");
    }
    return;
  }
  PairKey key{s, t};
  Rational stored = v;
  if (t < s) {
    key = {t, s};
    stored = -stored;
  }
  if (stored.is_zero()) {
    values_.erase(key);
  } else {
    values_[key] = stored;
  }
}

Rational BilinearFormWindow::value(BasisSymbol s, BasisSymbol t) const {
  if (!window_.contains(s)) out_of_window("BilinearFormWindow::value", s);
  if (!window_.contains(t)) out_of_window("BilinearFormWindow::value", t);
  if (s == t) return Rational(0);
  const bool flipped = t < s;
  auto it = values_.find(flipped ? PairKey{t, s} : PairKey{s, t});
  if (it == values_.end()) return Rational(0);
  return flipped ? -it->second : it->second;
}

Rational BilinearFormWindow::evaluate(const Element& x, const Element& y) const {
  Rational out = 0;
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      Rational v = value(sx, sy);
      if (!v.is_zero()) out += cx * cy * v;
    }
  }
  return out;
}

BilinearFormWindow BilinearFormWindow::operator-() const {
  BilinearFormWindow out(algebra_, window_);
  for (const auto& [k, v] : values_) out.values_.emplace(k, -v);
  return out;
}

namespace {

void require_compatible(const BilinearFormWindow& a, const BilinearFormWindow& b) {
  if (a.algebra() != b.algebra() || a.window().bound() != b.window().bound()) {
    throw std::invalid_argument("form arithmetic: algebra/window mismatch");
  }
}

}  // namespace

BilinearFormWindow& BilinearFormWindow::operator+=(const BilinearFormWindow& rhs) {
  require_compatible(*this, rhs);
  for (const auto& [k, v] : rhs.values_) {
    auto [it, inserted] = values_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) values_.erase(it);
    }
  }
  return *this;
}

BilinearFormWindow& BilinearFormWindow::operator-=(const BilinearFormWindow& rhs) {
  return *this += -rhs;
}

BilinearFormWindow& BilinearFormWindow::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    values_.clear();
    return *this;
  }
  for (auto& [k, v] : values_) v *= scalar;
  return *this;
}

std::string BilinearFormWindow::to_text() const {
  // display orientation: larger index first within a kind, L before I,
  // centrals last, so alpha prints as `PAIR L[2] L[-2] = 1/2`.
  std::string out;
  for (const auto& [key, v] : values_) {
    BasisSymbol s = key.first;
    BasisSymbol t = key.second;
    Rational shown = v;
    const bool flip = s.is_central() || (s.kind == t.kind && s.index < t.index);
    if (flip && !t.is_central()) {
      std::swap(s, t);
      shown = -shown;
    }
    out += "PAIR " + symbol_name(s, algebra_) + " " + symbol_name(t, algebra_) +
           " = " + shown.str() + "\n";
  }
  return out;
}

BilinearFormWindow BilinearFormWindow::from_text(std::string_view text,
                                                 AlgebraKind kind, Window window) {
  BilinearFormWindow out(kind, window);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag, s_text, t_text, eq, v_text;
    ls >> tag >> s_text >> t_text >> eq >> v_text;
    if (!ls || tag != "PAIR" || eq != "=") {
      throw std::invalid_argument("form parse error at line " + std::to_string(lineno));
    }
    Element s = parse_element(s_text, kind);
    Element t = parse_element(t_text, kind);
    if (s.term_count() != 1 || t.term_count() != 1 ||
        !(s.terms().begin()->second == Rational(1)) ||
        !(t.terms().begin()->second == Rational(1))) {
      throw std::invalid_argument("form parse error at line " + std::to_string(lineno) +
                                  ": expected bare basis symbols");
    }
    Rational prev = out.value(s.terms().begin()->first, t.terms().begin()->first);
    out.set(s.terms().begin()->first, t.terms().begin()->first,
            prev + Rational::from_string(v_text));
  }
  return out;
}

LinearFunctional& LinearFunctional::set(BasisSymbol s, const Rational& v) {
  if (v.is_zero()) {
    values_.erase(s);
  } else {
    values_[s] = v;
  }
  return *this;
}

Rational LinearFunctional::operator()(BasisSymbol s) const {
  auto it = values_.find(s);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational LinearFunctional::evaluate(const Element& x) const {
  Rational out = 0;
  for (const auto& [s, c] : x.terms()) {
    auto it = values_.find(s);
    if (it != values_.end()) out += c * it->second;
  }
  return out;
}

Rational cocycle_defect(const BilinearFormWindow& psi, const Element& x,
                        const Element& y, const Element& z) {
  const Window& win = psi.window();
  for (const Element* arg : {&x, &y, &z}) {
    for (const auto& [s, c] : arg->terms()) {
      if (!win.contains(s)) out_of_window("cocycle_defect", s);
    }
  }
  const AlgebraKind kind = psi.algebra();
  const Element bxy = bracket(x, y, kind);
  const Element byz = bracket(y, z, kind);
  const Element bzx = bracket(z, x, kind);
  for (const Element* b : {&bxy, &byz, &bzx}) {
    for (const auto& [s, c] : b->terms()) {
      if (!win.contains(s)) {
        throw std::domain_error(
            "cocycle_defect: bracket escapes the window at symbol " +
            symbol_name(s, AlgebraKind::wtilde));
      }
    }
  }
  return psi.evaluate(bxy, z) + psi.evaluate(byz, x) + psi.evaluate(bzx, y);
}

namespace {

// Calls fn(x, y, z, [x,y], [y,z], [z,x]) for every storage-ordered window
// triple whose three brackets stay inside the window; triples failing that
// are skipped entirely (never truncated). Optionally filters by total
// degree.
template <typename Fn>
void for_each_admissible_triple(AlgebraKind kind, const Window& window,
                                const std::optional<int>& degree_sum, Fn&& fn) {
  const auto symbols = window.symbols(kind);
  const std::size_t n = symbols.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Element xi = Element::basis(symbols[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element xj = Element::basis(symbols[j]);
      const Element bij = bracket(xi, xj, kind);
      if (!window.contains(bij)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (degree_sum &&
            symbols[i].degree() + symbols[j].degree() + symbols[k].degree() !=
                *degree_sum) {
          continue;
        }
        const Element xk = Element::basis(symbols[k]);
        const Element bjk = bracket(xj, xk, kind);
        if (!window.contains(bjk)) continue;
        const Element bki = bracket(xk, xi, kind);
        if (!window.contains(bki)) continue;
        fn(symbols[i], symbols[j], symbols[k], bij, bjk, bki);
      }
    }
  }
}

}  // namespace

std::optional<std::array<BasisSymbol, 3>> first_cocycle_violation(
    const BilinearFormWindow& psi) {
  std::optional<std::array<BasisSymbol, 3>> hit;
  for_each_admissible_triple(
      psi.algebra(), psi.window(), std::nullopt,
      [&](BasisSymbol x, BasisSymbol y, BasisSymbol z, const Element& bxy,
          const Element& byz, const Element& bzx) {
        if (hit) return;
        Rational d = psi.evaluate(bxy, Element::basis(z)) +
                     psi.evaluate(byz, Element::basis(x)) +
                     psi.evaluate(bzx, Element::basis(y));
        if (!d.is_zero()) hit = std::array<BasisSymbol, 3>{x, y, z};
      });
  return hit;
}

BilinearFormWindow make_alpha(const Window& window) {
  BilinearFormWindow out(AlgebraKind::w, window);
  for (int m = 2; m <= window.bound(); ++m) {
    // stored on the ordered pair (L(-m), L(m)); alpha(L_m, L_{-m}) = vir(m)
    out.set(BasisSymbol::L(-m), BasisSymbol::L(m), -vir(m));
  }
  return out;
}

BilinearFormWindow make_beta(const Window& window) {
  BilinearFormWindow out(AlgebraKind::w, window);
  for (int m = -window.bound(); m <= window.bound(); ++m) {
    Rational v = vir(m);
    if (v.is_zero()) continue;
    out.set(BasisSymbol::L(m), BasisSymbol::I(-m), v);
  }
  return out;
}

BilinearFormWindow coboundary_of(const LinearFunctional& f, AlgebraKind kind,
                                 const Window& window) {
  BilinearFormWindow out(kind, window);
  const auto symbols = window.symbols(kind);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      Element b = bracket(Element::basis(symbols[i]), Element::basis(symbols[j]), kind);
      if (!window.contains(b)) continue;  // excluded from the stored domain
      Rational v = f.evaluate(b);
      if (!v.is_zero()) out.set(symbols[i], symbols[j], v);
    }
  }
  return out;
}

namespace {

using PairKey = BilinearFormWindow::PairKey;

struct PairTable {
  std::vector<PairKey> pairs;
  std::map<PairKey, std::size_t> index;

  void add(BasisSymbol s, BasisSymbol t) {
    index.emplace(PairKey{s, t}, pairs.size());
    pairs.emplace_back(s, t);
  }
};

// Accumulates psi(bracket_elem, third) into a sparse row over the unknown
// pairs; orientation signs applied, psi(s, s) dropped.
void accumulate_pair_terms(const Element& bracket_elem, BasisSymbol third,
                           const PairTable& table,
                           std::map<std::size_t, Rational>& row) {
  for (const auto& [u, cu] : bracket_elem.terms()) {
    if (u == third) continue;
    PairKey key{u, third};
    Rational sign = 1;
    if (third < u) {
      key = {third, u};
      sign = -1;
    }
    auto it = table.index.find(key);
    if (it == table.index.end()) {
      throw std::logic_error("compute_h2_window: constraint hit an unregistered pair");
    }
    auto [rit, inserted] = row.emplace(it->second, sign * cu);
    if (!inserted) {
      rit->second += sign * cu;
      if (rit->second.is_zero()) row.erase(rit);
    }
  }
}

BilinearFormWindow form_from_vector(const std::vector<Rational>& v,
                                    const PairTable& table, AlgebraKind kind,
                                    const Window& window) {
  BilinearFormWindow out(kind, window);
  for (std::size_t i = 0; i < table.pairs.size(); ++i) {
    if (!v[i].is_zero()) out.set(table.pairs[i].first, table.pairs[i].second, v[i]);
  }
  return out;
}

}  // namespace

H2Report compute_h2_window(AlgebraKind kind, const Window& window, int degree) {
  if (window.bound() < 3) {
    throw std::invalid_argument(
        "compute_h2_window: window bound must be >= 3 to generate constraints");
  }
  H2Report report;
  report.algebra = kind;
  report.window = window.bound();
  report.degree = degree;

  const auto symbols = window.symbols(kind);

  PairTable table;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      if (symbols[i].degree() + symbols[j].degree() != degree) continue;
      table.add(symbols[i], symbols[j]);
    }
  }
  report.unknowns = table.pairs.size();

  std::vector<std::map<std::size_t, Rational>> rows;
  for_each_admissible_triple(
      kind, window, degree,
      [&](BasisSymbol x, BasisSymbol y, BasisSymbol z, const Element& bxy,
          const Element& byz, const Element& bzx) {
        std::map<std::size_t, Rational> row;
        accumulate_pair_terms(bxy, z, table, row);
        accumulate_pair_terms(byz, x, table, row);
        accumulate_pair_terms(bzx, y, table, row);
        if (!row.empty()) rows.push_back(std::move(row));
      });
  report.equations = rows.size();

  NullspaceResult cocycles = nullspace(matrix_from_sparse_rows(table.pairs.size(), rows));
  report.cocycle_dim = cocycles.nullity();

  // coboundary generators: indicator functionals on the non-central window
  // symbols of the matching degree
  std::vector<std::vector<Rational>> cob_vectors;
  std::vector<Rational> cob_l0, cob_i0;
  for (BasisSymbol u : symbols) {
    if (u.is_central() || u.degree() != degree) continue;
    std::vector<Rational> vec(table.pairs.size());
    bool nonzero = false;
    for (std::size_t p = 0; p < table.pairs.size(); ++p) {
      Element b = bracket(Element::basis(table.pairs[p].first),
                          Element::basis(table.pairs[p].second), kind);
      Rational c = b.coefficient(u);
      if (!c.is_zero()) {
        vec[p] = c;
        nonzero = true;
      }
    }
    if (u == BasisSymbol::L(0)) cob_l0 = vec;
    if (u == BasisSymbol::I(0)) cob_i0 = vec;
    if (nonzero) cob_vectors.push_back(std::move(vec));
  }

  RowSpace cob_span(table.pairs.size());
  for (const auto& v : cob_vectors) cob_span.insert(v);
  report.coboundary_dim = cob_span.rank();
  report.h2_dim = report.cocycle_dim - report.coboundary_dim;

  // representatives: cocycle basis vectors independent modulo coboundaries
  std::vector<std::vector<Rational>> reps;
  {
    RowSpace selection = cob_span;
    for (const auto& v : cocycles.basis) {
      if (reps.size() == report.h2_dim) break;
      if (selection.insert(v)) reps.push_back(v);
    }
  }

  if (degree == 0 && !reps.empty() && !cob_l0.empty() && !cob_i0.empty()) {
    // canonicalize: zero the values at (L1, L-1) and (L1, I-1), where
    // alpha and beta vanish
    auto p1 = table.index.find(PairKey{BasisSymbol::L(-1), BasisSymbol::L(1)});
    auto p2 = table.index.find(PairKey{BasisSymbol::L(1), BasisSymbol::I(-1)});
    if (p1 != table.index.end() && p2 != table.index.end()) {
      // the two generators are diagonal on the pinned pairs
      const Rational a11 = cob_l0[p1->second];  // -2 on w
      const Rational a22 = cob_i0[p2->second];  // +2 on w
      if (!a11.is_zero() && !a22.is_zero() && cob_i0[p1->second].is_zero() &&
          cob_l0[p2->second].is_zero()) {
        for (auto& rep : reps) {
          const Rational cl = rep[p1->second] / a11;
          const Rational ci = rep[p2->second] / a22;
          for (std::size_t i = 0; i < rep.size(); ++i) {
            rep[i] -= cl * cob_l0[i] + ci * cob_i0[i];
          }
        }
      }
    }
    // scale/mix so the representatives match alpha and beta exactly when
    // the window space allows it (probe coordinates at (L2, L-2), (L2, I-2))
    auto q1 = table.index.find(PairKey{BasisSymbol::L(-2), BasisSymbol::L(2)});
    auto q2 = table.index.find(PairKey{BasisSymbol::L(2), BasisSymbol::I(-2)});
    if (q1 != table.index.end() && q2 != table.index.end()) {
      auto probe = [&](const std::vector<Rational>& v) {
        return std::array<Rational, 2>{Rational(-2) * v[q1->second],
                                       Rational(2) * v[q2->second]};
      };
      std::vector<std::vector<Rational>> original = reps;
      std::vector<std::array<Rational, 2>> p;
      p.reserve(reps.size());
      for (const auto& rep : reps) p.push_back(probe(rep));
      std::size_t prow = 0;
      for (std::size_t col = 0; col < 2 && prow < reps.size(); ++col) {
        std::size_t hit = reps.size();
        for (std::size_t r = prow; r < reps.size(); ++r) {
          if (!p[r][col].is_zero()) {
            hit = r;
            break;
          }
        }
        if (hit == reps.size()) continue;
        std::swap(p[prow], p[hit]);
        std::swap(reps[prow], reps[hit]);
        const Rational inv = Rational(1) / p[prow][col];
        for (auto& x : p[prow]) x *= inv;
        for (auto& x : reps[prow]) x *= inv;
        for (std::size_t r = 0; r < reps.size(); ++r) {
          if (r == prow || p[r][col].is_zero()) continue;
          const Rational factor = p[r][col];
          for (std::size_t cidx = 0; cidx < 2; ++cidx) p[r][cidx] -= factor * p[prow][cidx];
          for (std::size_t i = 0; i < reps[r].size(); ++i) {
            reps[r][i] -= factor * reps[prow][i];
          }
        }
        ++prow;
      }
      if (prow != reps.size()) reps = std::move(original);
    }
  }

  for (const auto& rep : reps) {
    report.representatives.push_back(form_from_vector(rep, table, kind, window));
  }
  return report;
}

BgvReport compute_bgv_window(const Window& window) {
  if (window.bound() < 3) {
    throw std::invalid_argument(
        "compute_bgv_window: window bound must be >= 3 to generate constraints");
  }
  BgvReport report;
  report.window = window.bound();
  const int n = window.bound();

  PairTable table;
  for (int a = -n; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      table.add(BasisSymbol::I(a), BasisSymbol::I(b));
    }
  }
  report.unknowns = table.pairs.size();

  auto add_term = [&](std::map<std::size_t, Rational>& row, int a, int b,
                      const Rational& coeff) {
    if (coeff.is_zero() || a == b) return;
    PairKey key{BasisSymbol::I(a), BasisSymbol::I(b)};
    Rational sign = 1;
    if (b < a) {
      key = {BasisSymbol::I(b), BasisSymbol::I(a)};
      sign = -1;
    }
    auto it = table.index.find(key);
    if (it == table.index.end()) {
      throw std::logic_error("compute_bgv_window: unregistered pair");
    }
    auto [rit, inserted] = row.emplace(it->second, sign * coeff);
    if (!inserted) {
      rit->second += sign * coeff;
      if (rit->second.is_zero()) row.erase(rit);
    }
  };

  // (i-j) f(I_{i+j}, I_k) + (k-i) f(I_{k+i}, I_j) = 0; an instance is
  // admissible when each evaluation pair with a nonzero coefficient stays
  // inside the window
  std::vector<std::map<std::size_t, Rational>> rows;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      if (i != j && std::abs(i + j) > n) continue;
      for (int k = -n; k <= n; ++k) {
        if (k != i && std::abs(k + i) > n) continue;
        std::map<std::size_t, Rational> row;
        if (i != j) add_term(row, i + j, k, Rational(i - j));
        if (k != i) add_term(row, k + i, j, Rational(k - i));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  report.equations = rows.size();

  NullspaceResult ns = nullspace(matrix_from_sparse_rows(table.pairs.size(), rows));
  report.dim = ns.nullity();
  for (const auto& v : ns.basis) {
    report.basis.push_back(form_from_vector(v, table, AlgebraKind::w, window));
  }
  return report;
}

CocycleDecomposition decompose_cocycle(const BilinearFormWindow& psi) {
  if (psi.algebra() != AlgebraKind::w) {
    throw std::invalid_argument(
        "decompose_cocycle: the alpha/beta basis lives on algebra w");
  }
  const Window& window = psi.window();
  if (window.bound() < 2) {
    throw std::invalid_argument("decompose_cocycle: window bound must be >= 2");
  }
  for (const auto& [key, v] : psi.pairs()) {
    if (key.first.degree() + key.second.degree() != 0) {
      throw std::invalid_argument("decompose_cocycle: psi must be supported in degree 0");
    }
  }
  if (auto bad = first_cocycle_violation(psi)) {
    throw std::domain_error("decompose_cocycle: psi fails the cocycle identity on (" +
                            symbol_name((*bad)[0], AlgebraKind::wtilde) + ", " +
                            symbol_name((*bad)[1], AlgebraKind::wtilde) + ", " +
                            symbol_name((*bad)[2], AlgebraKind::wtilde) + ")");
  }

  // psi(L1, L-1) = 2 f(L0); psi(L2, L-2) = alpha/2 + 4 f(L0); same shape
  // on the I side with beta
  const Rational f_l0 = psi.value(BasisSymbol::L(1), BasisSymbol::L(-1)) / 2;
  const Rational f_i0 = psi.value(BasisSymbol::L(1), BasisSymbol::I(-1)) / 2;
  const Rational alpha_coeff =
      (psi.value(BasisSymbol::L(2), BasisSymbol::L(-2)) - Rational(4) * f_l0) * 2;
  const Rational beta_coeff =
      (psi.value(BasisSymbol::L(2), BasisSymbol::I(-2)) - Rational(4) * f_i0) * 2;

  LinearFunctional f;
  f.set(BasisSymbol::L(0), f_l0);
  f.set(BasisSymbol::I(0), f_i0);

  BilinearFormWindow residual = psi;
  residual -= make_alpha(window) * alpha_coeff;
  residual -= make_beta(window) * beta_coeff;
  residual -= coboundary_of(f, AlgebraKind::w, window);

  return CocycleDecomposition{alpha_coeff, beta_coeff, f, std::move(residual)};
}

}  // namespace wittlab
