#include "wittlab/automorphisms.hpp"

#include "wittlab/linalg.hpp"

#include <cctype>
#include <stdexcept>

namespace wittlab {

SigmaParams::SigmaParams(int eps, Rational lambda_, Rational a_, Rational mu_)
    : epsilon(eps), lambda(std::move(lambda_)), a(std::move(a_)), mu(std::move(mu_)) {
  if (epsilon != 1 && epsilon != -1) {
    throw std::invalid_argument("SigmaParams: epsilon must be +1 or -1");
  }
  if (a.is_zero() || mu.is_zero()) {
    throw std::invalid_argument("SigmaParams: a and mu must be nonzero");
  }
}

InnerWord& InnerWord::add_factor(int m, const Rational& k) {
  if (m == 0) {
    throw std::invalid_argument(
        "InnerWord: index 0 is forbidden (exp(k ad I_0) is the shear sigma_{-k})");
  }
  if (k.is_zero()) return *this;
  auto [it, inserted] = factors_.emplace(m, k);
  if (!inserted) {
    it->second += k;
    if (it->second.is_zero()) factors_.erase(it);
  }
  return *this;
}

CInftySeq& CInftySeq::set(int i, const Rational& v) {
  if (v.is_zero()) {
    entries_.erase(i);
  } else {
    entries_[i] = v;
  }
  return *this;
}

Rational CInftySeq::get(int i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

CInftySeq& CInftySeq::operator+=(const CInftySeq& rhs) {
  for (const auto& [i, v] : rhs.entries_) set(i, get(i) + v);
  return *this;
}

namespace {

void require_w_element(const Element& x, const char* who) {
  for (const auto& [s, c] : x.terms()) {
    if (s.is_central()) {
      throw std::invalid_argument(std::string(who) +
                                  ": argument must live in w (no central symbols)");
    }
  }
}

}  // namespace

Element apply_inner(const InnerWord& word, const Element& x) {
  require_w_element(x, "apply_inner");
  Element out = x;
  for (const auto& [s, c] : x.terms()) {
    if (s.kind != SymbolKind::l) continue;  // every I_n is fixed
    const int n = s.index;
    for (const auto& [m, k] : word.factors()) {
      out.add_term(BasisSymbol::I(m + n), c * k * Rational(m - n));
    }
  }
  return out;
}

Element apply_sigma(const SigmaParams& p, const Element& x) {
  require_w_element(x, "apply_sigma");
  Element out;
  for (const auto& [s, c] : x.terms()) {
    const int n = s.index;
    const Rational an = pow(p.a, n);
    if (s.kind == SymbolKind::l) {
      out.add_term(BasisSymbol::L(p.epsilon * n), c * an * Rational(p.epsilon));
      out.add_term(BasisSymbol::I(p.epsilon * n), c * an * p.lambda * Rational(n));
    } else {
      out.add_term(BasisSymbol::I(p.epsilon * n), c * an * p.mu);
    }
  }
  return out;
}

Element apply_nf(const AutomorphismNF& f, const Element& x) {
  return apply_inner(f.inner, apply_sigma(f.sigma, x));
}

SigmaParams compose_sigma(const SigmaParams& p1, const SigmaParams& p2) {
  return SigmaParams(p1.epsilon * p2.epsilon, p1.lambda + p1.mu * p2.lambda,
                     pow(p1.a, p2.epsilon) * p2.a, p1.mu * p2.mu);
}

SigmaParams invert_sigma(const SigmaParams& p) {
  return SigmaParams(p.epsilon, -p.lambda / p.mu, pow(p.a, -p.epsilon),
                     Rational(1) / p.mu);
}

InnerWord conjugate_word(const SigmaParams& p, const InnerWord& word) {
  InnerWord out;
  for (const auto& [m, k] : word.factors()) {
    out.add_factor(p.epsilon * m, k * pow(p.a, m) * p.mu);
  }
  return out;
}

AutomorphismNF compose_nf(const AutomorphismNF& f, const AutomorphismNF& g) {
  // f o g = f.inner o f.sigma o g.inner o g.sigma
  //       = f.inner o (f.sigma g.inner f.sigma^{-1}) o (f.sigma o g.sigma)
  AutomorphismNF out;
  out.inner = f.inner;
  const InnerWord moved = conjugate_word(f.sigma, g.inner);
  for (const auto& [m, k] : moved.factors()) {
    out.inner.add_factor(m, k);
  }
  out.sigma = compose_sigma(f.sigma, g.sigma);
  return out;
}

AutomorphismNF invert_nf(const AutomorphismNF& f) {
  // (w o s)^{-1} = s^{-1} o w^{-1} = (s^{-1} w^{-1} s) o s^{-1}
  AutomorphismNF out;
  out.sigma = invert_sigma(f.sigma);
  InnerWord negated;
  for (const auto& [m, k] : f.inner.factors()) negated.add_factor(m, -k);
  out.inner = conjugate_word(out.sigma, negated);
  return out;
}

VerifyAutReport verify_automorphism_map(const ElementMap& f, AlgebraKind kind,
                                        const Window& window) {
  VerifyAutReport report;
  report.algebra = kind;
  report.window = window.bound();
  const auto symbols = window.symbols(kind);
  for (std::size_t i = 0; i < symbols.size() && !report.first_violation; ++i) {
    const Element x = Element::basis(symbols[i]);
    const Element fx = f(x);
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      const Element y = Element::basis(symbols[j]);
      const Element b = bracket(x, y, kind);
      if (!window.contains(b)) {
        ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      if (!(f(b) == bracket(fx, f(y), kind))) {
        report.first_violation = std::make_pair(symbols[i], symbols[j]);
        break;
      }
    }
  }
  return report;
}

namespace {

// sigma on the non-central part, same formulas as on w
Element lift_sigma_noncentral(const SigmaParams& p, const Element& x) {
  Element out;
  for (const auto& [s, c] : x.terms()) {
    const int n = s.index;
    const Rational an = pow(p.a, n);
    if (s.kind == SymbolKind::l) {
      out.add_term(BasisSymbol::L(p.epsilon * n), c * an * Rational(p.epsilon));
      out.add_term(BasisSymbol::I(p.epsilon * n), c * an * p.lambda * Rational(n));
    } else if (s.kind == SymbolKind::i) {
      out.add_term(BasisSymbol::I(p.epsilon * n), c * an * p.mu);
    } else {
      throw std::logic_error("lift_sigma_noncentral: central symbol");
    }
  }
  return out;
}

// the inner word acting through the wtilde bracket, so the unipotent
// factors pick up their central corrections
Element lift_inner_wtilde(const InnerWord& word, Element x) {
  for (const auto& [m, k] : word.factors()) {
    x += bracket(Element::I(m), x, AlgebraKind::wtilde) * k;
  }
  return x;
}

Element lift_noncentral(const AutomorphismNF& f, const Element& x) {
  return lift_inner_wtilde(f.inner, lift_sigma_noncentral(f.sigma, x));
}

VerifyAutReport verify_automorphism_wtilde(const AutomorphismNF& f, const Window& window) {
  VerifyAutReport report;
  report.algebra = AlgebraKind::wtilde;
  report.window = window.bound();

  // unknown central images: columns (C1->C1, C1->C2, C2->C1, C2->C2)
  std::vector<std::map<std::size_t, Rational>> rows;
  std::vector<Rational> rhs;

  const auto symbols = window.symbols(AlgebraKind::wtilde);
  for (std::size_t i = 0; i < symbols.size() && !report.first_violation; ++i) {
    if (symbols[i].is_central()) continue;  // [x, C] = 0 on both sides
    const Element x = Element::basis(symbols[i]);
    const Element fx = lift_noncentral(f, x);
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      if (symbols[j].is_central()) continue;
      const Element y = Element::basis(symbols[j]);
      Element b = bracket(x, y, AlgebraKind::wtilde);
      const Rational g1 = b.coefficient(BasisSymbol::C1());
      const Rational g2 = b.coefficient(BasisSymbol::C2());
      b.add_term(BasisSymbol::C1(), -g1);
      b.add_term(BasisSymbol::C2(), -g2);
      if (!window.contains(b)) {
        ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      Element diff = bracket(fx, lift_noncentral(f, y), AlgebraKind::wtilde);
      diff -= lift_noncentral(f, b);
      // whatever is not central must already match
      bool bad = false;
      for (const auto& [s, c] : diff.terms()) {
        if (!s.is_central()) {
          bad = true;
          break;
        }
      }
      if (bad) {
        report.first_violation = std::make_pair(symbols[i], symbols[j]);
        break;
      }
      // g1 (c00 C1 + c01 C2) + g2 (c10 C1 + c11 C2) = central part of diff
      if (!g1.is_zero() || !g2.is_zero()) {
        std::map<std::size_t, Rational> row_c1, row_c2;
        if (!g1.is_zero()) {
          row_c1[0] = g1;
          row_c2[1] = g1;
        }
        if (!g2.is_zero()) {
          row_c1[2] = g2;
          row_c2[3] = g2;
        }
        rows.push_back(std::move(row_c1));
        rhs.push_back(diff.coefficient(BasisSymbol::C1()));
        rows.push_back(std::move(row_c2));
        rhs.push_back(diff.coefficient(BasisSymbol::C2()));
      } else if (!diff.coefficient(BasisSymbol::C1()).is_zero() ||
                 !diff.coefficient(BasisSymbol::C2()).is_zero()) {
        report.first_violation = std::make_pair(symbols[i], symbols[j]);
        break;
      }
    }
  }
  if (report.first_violation) return report;

  RationalMatrix a(rows.size(), 4);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) a.at(r, c) = v;
  }
  LinearSolveResult solved = solve_linear(a, rhs);
  if (solved.feasible()) {
    const auto& x = *solved.solution;
    CentralAssignment assignment;
    assignment.c[0][0] = x[0];
    assignment.c[0][1] = x[1];
    assignment.c[1][0] = x[2];
    assignment.c[1][1] = x[3];
    report.central = assignment;
    report.central_unique = rank(a) == 4;
  }
  return report;
}

}  // namespace

VerifyAutReport verify_automorphism(const AutomorphismNF& f, AlgebraKind kind,
                                    const Window& window) {
  switch (kind) {
    case AlgebraKind::w:
      return verify_automorphism_map(
          [&f](const Element& x) { return apply_nf(f, x); }, AlgebraKind::w, window);
    case AlgebraKind::wtilde:
      return verify_automorphism_wtilde(f, window);
    case AlgebraKind::w22:
      throw std::invalid_argument(
          "verify_automorphism: lifts are certified on w and wtilde");
  }
  throw std::logic_error("verify_automorphism: bad enum value");
}

CInftySeq encode_zt(const InnerWord& word, const Rational& lambda) {
  CInftySeq out;
  out.set(0, lambda);
  for (const auto& [m, k] : word.factors()) {
    out.set(m < 0 ? m : m + 1, k);
  }
  return out;
}

std::pair<InnerWord, Rational> decode_zt(const CInftySeq& seq) {
  InnerWord word;
  // slot 1 is the I_0 direction: exp(k ad I_0) = sigma_{-k}
  Rational lambda = seq.get(0) - seq.get(1);
  for (const auto& [i, v] : seq.entries()) {
    if (i < 0) {
      word.add_factor(i, v);
    } else if (i >= 2) {
      word.add_factor(i - 1, v);
    }
  }
  return {std::move(word), std::move(lambda)};
}

std::string to_text(const AutomorphismNF& f) {
  std::string out = "inner{";
  bool first = true;
  for (const auto& [m, k] : f.inner.factors()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(m) + ":" + k.str();
  }
  out += "} sigma(e=" + std::to_string(f.sigma.epsilon) + ", l=" + f.sigma.lambda.str() +
         ", a=" + f.sigma.a.str() + ", mu=" + f.sigma.mu.str() + ")";
  return out;
}

namespace {

class AutScanner {
public:
  explicit AutScanner(std::string_view text) : text_(text) {}

  AutomorphismNF parse() {
    skip_ws();
    if (done()) fail("empty automorphism");
    if (text_.find("inner{") != std::string_view::npos ||
        text_.find("sigma(") != std::string_view::npos) {
      return parse_normal_form();
    }
    return parse_generator_word();
  }

private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(char c) {
    if (!done() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("automorphism parse error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  bool consume_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  // a rational token: sign, digits, optional /digits
  Rational parse_rational() {
    skip_ws();
    std::size_t start = pos_;
    if (!done() && (peek() == '+' || peek() == '-')) ++pos_;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a rational");
    return Rational::from_string(text_.substr(start, pos_ - start));
  }

  int parse_int() {
    Rational r = parse_rational();
    if (!r.is_integer()) fail("expected an integer");
    return static_cast<int>(r.numerator().convert_to<long long>());
  }

  AutomorphismNF parse_normal_form() {
    AutomorphismNF out;
    bool any = false;
    if (consume_keyword("inner")) {
      any = true;
      skip_ws();
      expect('{');
      skip_ws();
      if (!consume('}')) {
        while (true) {
          int m = parse_int();
          skip_ws();
          expect(':');
          Rational k = parse_rational();
          out.inner.add_factor(m, k);
          skip_ws();
          if (consume('}')) break;
          expect(',');
        }
      }
    }
    if (consume_keyword("sigma")) {
      any = true;
      skip_ws();
      expect('(');
      auto keyed = [&](std::string_view key) {
        skip_ws();
        if (!consume_keyword(key)) fail("expected '" + std::string(key) + "='");
        skip_ws();
        expect('=');
        return parse_rational();
      };
      Rational e = keyed("e");
      skip_ws();
      expect(',');
      Rational l = keyed("l");
      skip_ws();
      expect(',');
      Rational a = keyed("a");
      skip_ws();
      expect(',');
      Rational mu = keyed("mu");
      skip_ws();
      expect(')');
      if (!e.is_integer()) fail("epsilon must be +1 or -1");
      out.sigma = SigmaParams(static_cast<int>(e.numerator().convert_to<long long>()),
                              l, a, mu);
    }
    skip_ws();
    if (!done()) fail("trailing input");
    if (!any) fail("expected inner{...} or sigma(...)");
    return out;
  }

  AutomorphismNF parse_generator_word() {
    AutomorphismNF out;
    bool first = true;
    while (true) {
      skip_ws();
      if (done()) break;
      AutomorphismNF token = parse_generator_token();
      out = first ? token : compose_nf(out, token);
      first = false;
    }
    if (first) fail("expected at least one generator token");
    return out;
  }

  AutomorphismNF parse_generator_token() {
    std::size_t start = pos_;
    while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    skip_ws();
    expect('(');
    AutomorphismNF out;
    if (name == "pi") {
      int eps = parse_int();
      out.sigma = SigmaParams(eps, 0, 1, 1);
    } else if (name == "t") {
      out.sigma = SigmaParams(1, parse_rational(), 1, 1);
    } else if (name == "b") {
      Rational a = parse_rational();
      skip_ws();
      expect(',');
      Rational mu = parse_rational();
      out.sigma = SigmaParams(1, 0, a, mu);
    } else if (name == "z") {
      int m = parse_int();
      skip_ws();
      expect(',');
      Rational k = parse_rational();
      out.inner.add_factor(m, k);
    } else {
      fail("unknown generator '" + std::string(name) +
           "' (expected pi, t, b or z)");
    }
    skip_ws();
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AutomorphismNF parse_automorphism(std::string_view text) {
  return AutScanner(text).parse();
}

}  // namespace wittlab
