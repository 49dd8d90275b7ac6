#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittlab/automorphisms.hpp"

#include "support/test_util.hpp"

#include <random>

using namespace wittlab;

namespace {

SigmaParams random_sigma(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> flip(0, 1);
  return SigmaParams(flip(rng) ? 1 : -1, test::random_rational(rng, 6, 4),
                     test::random_rational(rng, 6, 4, true),
                     test::random_rational(rng, 6, 4, true));
}

InnerWord random_word(std::mt19937_64& rng, int max_index, int max_factors) {
  std::uniform_int_distribution<int> count(0, max_factors);
  std::uniform_int_distribution<int> index(-max_index, max_index);
  InnerWord out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int m = index(rng);
    if (m == 0) m = max_index;
    out.add_factor(m, test::random_rational(rng, 6, 4, true));
  }
  return out;
}

bool agree_on_window(const AutomorphismNF& f, const AutomorphismNF& g, int bound) {
  for (int n = -bound; n <= bound; ++n) {
    if (!(apply_nf(f, Element::L(n)) == apply_nf(g, Element::L(n)))) return false;
    if (!(apply_nf(f, Element::I(n)) == apply_nf(g, Element::I(n)))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("inner factors act as stated") {
  InnerWord word;
  word.add_factor(3, Rational(2));
  CHECK(apply_inner(word, Element::L(1)) ==
        Element::L(1) + Element::I(4) * Rational(4));
  CHECK(apply_inner(word, Element::I(5)) == Element::I(5));
  CHECK(apply_inner(InnerWord{}, Element::L(7) - Element::I(2)) ==
        Element::L(7) - Element::I(2));
  CHECK_THROWS_AS(word.add_factor(0, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(apply_inner(word, Element::C1()), std::invalid_argument);
  // coefficients merge and cancel
  InnerWord cancel;
  cancel.add_factor(2, Rational(1));
  cancel.add_factor(2, Rational(-1));
  CHECK(cancel.empty());
}

TEST_CASE("sigma family formulas") {
  CHECK(apply_sigma(SigmaParams::identity(), Element::L(3) - Element::I(2)) ==
        Element::L(3) - Element::I(2));
  CHECK(apply_sigma(SigmaParams(-1, 0, 2, 1), Element::L(3)) ==
        Element::L(-3) * Rational(-8));
  const SigmaParams p(1, 1, 1, 3);
  CHECK(apply_sigma(p, Element::L(2)) == Element::L(2) + Element::I(2) * Rational(2));
  CHECK(apply_sigma(p, Element::I(2)) == Element::I(2) * Rational(3));
  // exact rational powers for negative indices
  CHECK(apply_sigma(SigmaParams(1, 0, 2, 1), Element::L(-1)) ==
        Element::L(-1) * Rational(BigInt(1), BigInt(2)));
  CHECK_THROWS_AS(SigmaParams(2, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(SigmaParams(1, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SigmaParams(1, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("composition parameters, frozen example") {
  const SigmaParams c = compose_sigma(SigmaParams(-1, 1, 2, 3), SigmaParams(1, 2, 5, 7));
  CHECK(c == SigmaParams(-1, 7, 10, 21));
  const SigmaParams p(-1, Rational(BigInt(1), BigInt(2)), 3, Rational(BigInt(2), BigInt(5)));
  CHECK(compose_sigma(p, SigmaParams::identity()) == p);
  CHECK(compose_sigma(SigmaParams::identity(), p) == p);
}

TEST_CASE("composition agrees with application on the window") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    const SigmaParams p1 = random_sigma(rng);
    const SigmaParams p2 = random_sigma(rng);
    const SigmaParams c = compose_sigma(p1, p2);
    for (int n = -8; n <= 8; ++n) {
      CHECK(apply_sigma(c, Element::L(n)) ==
            apply_sigma(p1, apply_sigma(p2, Element::L(n))));
      CHECK(apply_sigma(c, Element::I(n)) ==
            apply_sigma(p1, apply_sigma(p2, Element::I(n))));
    }
  }
}

TEST_CASE("inverse parameters") {
  const SigmaParams p(1, 5, 7, 11);
  CHECK(invert_sigma(p) ==
        SigmaParams(1, Rational(BigInt(-5), BigInt(11)), Rational(BigInt(1), BigInt(7)),
                    Rational(BigInt(1), BigInt(11))));
  CHECK(invert_sigma(SigmaParams::identity()) == SigmaParams::identity());
  CHECK(invert_sigma(SigmaParams(-1, 2, 3, 4)) ==
        SigmaParams(-1, Rational(BigInt(-1), BigInt(2)), 3, Rational(BigInt(1), BigInt(4))));

  std::mt19937_64 rng(73);
  for (int t = 0; t < 100; ++t) {
    const SigmaParams q = random_sigma(rng);
    CHECK(compose_sigma(q, invert_sigma(q)).is_identity());
    CHECK(compose_sigma(invert_sigma(q), q).is_identity());
    for (int n = -8; n <= 8; ++n) {
      CHECK(apply_sigma(q, apply_sigma(invert_sigma(q), Element::L(n))) == Element::L(n));
    }
  }
}

TEST_CASE("group associativity on random parameter triples") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 100; ++t) {
    const SigmaParams a = random_sigma(rng);
    const SigmaParams b = random_sigma(rng);
    const SigmaParams c = random_sigma(rng);
    CHECK(compose_sigma(compose_sigma(a, b), c) == compose_sigma(a, compose_sigma(b, c)));
  }
}

TEST_CASE("normal-form composition") {
  SUBCASE("inner words merge with added coefficients") {
    AutomorphismNF f, g;
    f.inner.add_factor(3, Rational(2));
    f.inner.add_factor(-1, Rational(1));
    g.inner.add_factor(3, Rational(5));
    const AutomorphismNF fg = compose_nf(f, g);
    CHECK(fg.sigma.is_identity());
    CHECK(fg.inner.factors().at(3) == Rational(7));
    CHECK(fg.inner.factors().at(-1) == Rational(1));
  }
  SUBCASE("shear parts add") {
    AutomorphismNF f, g;
    f.sigma = SigmaParams(1, 3, 1, 1);
    g.sigma = SigmaParams(1, 4, 1, 1);
    CHECK(compose_nf(f, g).sigma == SigmaParams(1, 7, 1, 1));
  }
  SUBCASE("conjugation moves sigma past an inner factor") {
    const SigmaParams p(1, 0, 2, 3);
    AutomorphismNF sigma_only;
    sigma_only.sigma = p;
    AutomorphismNF z_only;
    z_only.inner.add_factor(2, Rational(5));
    // sigma o z = z' o sigma with k' = k a^m mu
    const AutomorphismNF left = compose_nf(sigma_only, z_only);
    AutomorphismNF expected;
    expected.inner.add_factor(2, Rational(5) * pow(Rational(2), 2) * Rational(3));
    expected.sigma = p;
    CHECK(left == expected);
    CHECK(agree_on_window(left, expected, 8));
  }
  SUBCASE("soundness on random words") {
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<int> length(1, 6);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> index(1, 4);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int t = 0; t < 100; ++t) {
      std::vector<AutomorphismNF> tokens;
      const int len = length(rng);
      for (int i = 0; i < len; ++i) {
        AutomorphismNF token;
        switch (kind(rng)) {
          case 0: token.sigma = SigmaParams(flip(rng) ? 1 : -1, 0, 1, 1); break;
          case 1: token.sigma = SigmaParams(1, test::random_rational(rng, 5, 3), 1, 1); break;
          case 2:
            token.sigma = SigmaParams(1, 0, test::random_rational(rng, 5, 3, true),
                                      test::random_rational(rng, 5, 3, true));
            break;
          default:
            token.inner.add_factor(flip(rng) ? index(rng) : -index(rng),
                                   test::random_rational(rng, 5, 3, true));
        }
        tokens.push_back(std::move(token));
      }
      AutomorphismNF nf = tokens.front();
      for (std::size_t i = 1; i < tokens.size(); ++i) nf = compose_nf(nf, tokens[i]);
      for (int n = -8; n <= 8; ++n) {
        Element expected = Element::L(n);
        for (std::size_t i = tokens.size(); i-- > 0;) {
          expected = apply_nf(tokens[i], expected);
        }
        CHECK(apply_nf(nf, Element::L(n)) == expected);
      }
    }
  }
  SUBCASE("inverse normal form") {
    std::mt19937_64 rng(89);
    for (int t = 0; t < 50; ++t) {
      AutomorphismNF f{random_word(rng, 4, 3), random_sigma(rng)};
      const AutomorphismNF inv = invert_nf(f);
      const AutomorphismNF left = compose_nf(f, inv);
      const AutomorphismNF right = compose_nf(inv, f);
      CHECK(left == AutomorphismNF::identity());
      CHECK(right == AutomorphismNF::identity());
    }
  }
}

TEST_CASE("bracket certification on w") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 20; ++t) {
    AutomorphismNF f{random_word(rng, 3, 3), random_sigma(rng)};
    VerifyAutReport r = verify_automorphism(f, AlgebraKind::w, Window(8));
    CHECK(r.ok());
    CHECK(r.pairs_checked > 0);
  }
  VerifyAutReport id = verify_automorphism(AutomorphismNF::identity(), AlgebraKind::w,
                                           Window(8));
  CHECK(id.ok());
  CHECK(id.pairs_skipped > 0);  // high-index brackets escape and are counted
}

TEST_CASE("the shear-broken map is rejected") {
  ElementMap broken = [](const Element& x) {
    Element out;
    for (const auto& [s, c] : x.terms()) {
      if (s.kind == SymbolKind::l) {
        out.add_term(s, c);
      } else {
        out.add_term(s, c * 2);
        out.add_term(BasisSymbol::L(s.index), c);
      }
    }
    return out;
  };
  VerifyAutReport r = verify_automorphism_map(broken, AlgebraKind::w, Window(4));
  REQUIRE(r.first_violation.has_value());
  CHECK(r.first_violation->first.kind == SymbolKind::i);
  CHECK(r.first_violation->second.kind == SymbolKind::i);
}

TEST_CASE("lifts to wtilde pin the central images to eps and mu") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 15; ++t) {
    AutomorphismNF f{random_word(rng, 3, 3), random_sigma(rng)};
    VerifyAutReport r = verify_automorphism(f, AlgebraKind::wtilde, Window(6));
    REQUIRE(r.ok());
    REQUIRE(r.central.has_value());
    CHECK(r.central_unique);
    CHECK(r.central->c[0][0] == Rational(f.sigma.epsilon));
    CHECK(r.central->c[0][1].is_zero());
    CHECK(r.central->c[1][0].is_zero());
    CHECK(r.central->c[1][1] == f.sigma.mu);
  }
  CHECK_THROWS_AS(verify_automorphism(AutomorphismNF::identity(), AlgebraKind::w22,
                                      Window(4)),
                  std::invalid_argument);
}

TEST_CASE("distinct parameters give distinct maps on a grid") {
  std::vector<SigmaParams> grid;
  for (int eps : {1, -1}) {
    for (int l : {0, 1}) {
      for (int a : {1, 2}) {
        for (int mu : {1, 3}) grid.emplace_back(eps, l, a, mu);
      }
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      bool differ = false;
      for (int n = -8; n <= 8 && !differ; ++n) {
        differ = !(apply_sigma(grid[i], Element::L(n)) ==
                   apply_sigma(grid[j], Element::L(n))) ||
                 !(apply_sigma(grid[i], Element::I(n)) ==
                   apply_sigma(grid[j], Element::I(n)));
      }
      CHECK(differ);
    }
  }
}

TEST_CASE("sequence encoding follows the shift convention") {
  InnerWord word;
  word.add_factor(-2, Rational(5));
  word.add_factor(3, Rational(7));
  const CInftySeq seq = encode_zt(word, Rational(2));
  CHECK(seq.get(-2) == Rational(5));
  CHECK(seq.get(0) == Rational(2));
  CHECK(seq.get(4) == Rational(7));
  CHECK(seq.get(3) == Rational(0));
  CHECK(seq.entries().size() == 3);

  CHECK(encode_zt(InnerWord{}, Rational(0)) == CInftySeq{});

  auto [w_back, l_back] = decode_zt(seq);
  CHECK(w_back == word);
  CHECK(l_back == Rational(2));

  // slot 1 is the I_0 direction and folds into the shear
  CInftySeq slot1;
  slot1.set(1, Rational(3));
  auto [w1, l1] = decode_zt(slot1);
  CHECK(w1.empty());
  CHECK(l1 == Rational(-3));
}

TEST_CASE("encoding round-trips and is additive on random elements") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 100; ++t) {
    const InnerWord w1 = random_word(rng, 5, 4);
    const Rational l1 = test::random_rational(rng);
    const InnerWord w2 = random_word(rng, 5, 4);
    const Rational l2 = test::random_rational(rng);

    auto [wb, lb] = decode_zt(encode_zt(w1, l1));
    CHECK(wb == w1);
    CHECK(lb == l1);

    AutomorphismNF x{w1, SigmaParams(1, l1, 1, 1)};
    AutomorphismNF y{w2, SigmaParams(1, l2, 1, 1)};
    const AutomorphismNF xy = compose_nf(x, y);
    CHECK(encode_zt(xy.inner, xy.sigma.lambda) == encode_zt(w1, l1) + encode_zt(w2, l2));
  }
}

TEST_CASE("automorphism text format") {
  AutomorphismNF f;
  f.inner.add_factor(3, Rational(2));
  f.inner.add_factor(-1, Rational(BigInt(1), BigInt(2)));
  f.sigma = SigmaParams(-1, 7, 10, 21);
  CHECK(to_text(f) == "inner{-1:1/2, 3:2} sigma(e=-1, l=7, a=10, mu=21)");
  CHECK(parse_automorphism("inner{3:2, -1:1/2} sigma(e=-1, l=7, a=10, mu=21)") == f);
  CHECK(parse_automorphism(to_text(f)) == f);

  // either part may stand alone
  CHECK(parse_automorphism("sigma(e=1, l=0, a=2, mu=3)").inner.empty());
  CHECK(parse_automorphism("inner{2:1}").sigma.is_identity());

  CHECK_THROWS_AS(parse_automorphism(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_automorphism("sigma(e=2, l=0, a=1, mu=1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_automorphism("inner{0:1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_automorphism("q(1)"), std::invalid_argument);
}

TEST_CASE("generator words compose rightmost-first") {
  // b(2,3) o t(1): the shear entry becomes mu1 * lambda2 = 3
  const AutomorphismNF c = parse_automorphism("b(2,3) t(1)");
  CHECK(c.sigma == SigmaParams(1, 3, 2, 3));
  CHECK(c.inner.empty());

  const AutomorphismNF z = parse_automorphism("z(3,2)");
  CHECK(apply_nf(z, Element::L(1)) == Element::L(1) + Element::I(4) * Rational(4));

  const AutomorphismNF pi = parse_automorphism("pi(-1)");
  CHECK(pi.sigma == SigmaParams(-1, 0, 1, 1));

  const AutomorphismNF composite = parse_automorphism("pi(-1) t(1/2) b(2,3) z(-2,1)");
  std::vector<AutomorphismNF> tokens = {
      parse_automorphism("pi(-1)"), parse_automorphism("t(1/2)"),
      parse_automorphism("b(2,3)"), parse_automorphism("z(-2,1)")};
  for (int n = -6; n <= 6; ++n) {
    Element expected = Element::L(n);
    for (std::size_t i = tokens.size(); i-- > 0;) expected = apply_nf(tokens[i], expected);
    CHECK(apply_nf(composite, Element::L(n)) == expected);
  }
}
