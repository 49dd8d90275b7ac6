#include "wittlab/element.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wittlab {

Rational Element::coefficient(BasisSymbol s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element& Element::add_term(BasisSymbol s, const Rational& coeff) {
  if (coeff.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Element Element::operator-() const {
  Element out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  for (const auto& [s, c] : rhs.terms_) add_term(s, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (const auto& [s, c] : rhs.terms_) add_term(s, -c);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scalar;
  return *this;
}

bool element_valid(const Element& x, AlgebraKind kind) {
  for (const auto& [s, c] : x.terms()) {
    if (!symbol_valid(s, kind)) return false;
  }
  return true;
}

std::string to_text(const Element& x, AlgebraKind kind) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<BasisSymbol, Rational>> terms(x.terms().begin(), x.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return display_less(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (!(mag == Rational(1))) {
      out += mag.str();
      out += '*';
    }
    out += symbol_name(s, kind);
  }
  return out;
}

namespace {

class Scanner {
public:
  Scanner(std::string_view text, AlgebraKind kind) : text_(text), kind_(kind) {}

  Element parse() {
    skip_ws();
    if (done()) fail("empty element");
    // bare zero
    {
      std::size_t save = pos_;
      if (peek() == '0') {
        ++pos_;
        skip_ws();
        if (done()) return Element{};
        pos_ = save;
      }
    }
    Element out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_ws();
      Rational coeff = parse_coefficient();
      BasisSymbol sym = parse_symbol();
      out.add_term(sym, negative ? -coeff : coeff);
      skip_ws();
      if (done()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-' between terms");
      negative = c == '-';
      ++pos_;
    }
    return out;
  }

private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("element parse error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (!done() && peek() >= '0' && peek() <= '9') ++pos_;
    if (pos_ == start) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  // `p` or `p/q`, always followed by '*'; absent coefficient means 1.
  Rational parse_coefficient() {
    if (done() || peek() < '0' || peek() > '9') return Rational(1);
    BigInt num = parse_digits();
    BigInt den = 1;
    skip_ws();
    if (!done() && peek() == '/') {
      ++pos_;
      skip_ws();
      den = parse_digits();
      if (den.is_zero()) fail("zero denominator");
      skip_ws();
    }
    if (done() || peek() != '*') fail("expected '*' after coefficient");
    ++pos_;
    skip_ws();
    return Rational(std::move(num), std::move(den));
  }

  int parse_index() {
    if (done() || peek() != '[') fail("expected '['");
    ++pos_;
    skip_ws();
    bool negative = false;
    if (!done() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos_;
    }
    skip_ws();
    BigInt digits = parse_digits();
    if (digits > BigInt(1000000)) fail("index out of range");
    int value = static_cast<int>(digits.convert_to<long long>());
    skip_ws();
    if (done() || peek() != ']') fail("expected ']'");
    ++pos_;
    return negative ? -value : value;
  }

  BasisSymbol parse_symbol() {
    if (done()) fail("expected a basis symbol");
    char c = peek();
    if (c == 'L' || c == 'I') {
      ++pos_;
      skip_ws();
      int index = parse_index();
      BasisSymbol sym = c == 'L' ? BasisSymbol::L(index) : BasisSymbol::I(index);
      return sym;  // L and I exist in every algebra
    }
    if (c == 'C') {
      std::size_t at = pos_;
      ++pos_;
      if (!done() && (peek() == '1' || peek() == '2')) {
        BasisSymbol sym = peek() == '1' ? BasisSymbol::C1() : BasisSymbol::C2();
        ++pos_;
        if (kind_ != AlgebraKind::wtilde) {
          pos_ = at;
          fail("symbol valid only for wtilde");
        }
        return sym;
      }
      if (kind_ != AlgebraKind::w22) {
        pos_ = at;
        fail("symbol 'C' valid only for w22");
      }
      return BasisSymbol::C1();  // the merged w22 central
    }
    fail("expected a basis symbol (L[m], I[m], C1, C2 or C)");
  }

  std::string_view text_;
  AlgebraKind kind_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, AlgebraKind kind) {
  return Scanner(text, kind).parse();
}

}  // namespace wittlab
