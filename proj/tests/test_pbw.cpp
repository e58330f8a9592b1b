#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpbw/algebra.hpp"
#include "qpbw/errors.hpp"

using namespace qpbw::algebra;
using qpbw::coeff::LaurentPoly;
using qpbw::coeff::RationalFunction;
using qpbw::weyl::Root;
using qpbw::weyl::Word;

namespace {

const Word w121{2, {1, 2, 1}};
const Word w212{2, {2, 1, 2}};

RationalFunction e_norm() {
  LaurentPoly d(1);
  d.add_term(2, -1);
  return RationalFunction(LaurentPoly(1), d);
}

WordElt from_word(int rank, const GenWord& w, const RationalFunction& c = RationalFunction(1)) {
  WordElt x(rank);
  x.add_term(w, c);
  return x;
}

}  // namespace

TEST_CASE("A2 root vectors") {
  Algebra alg(2);
  CHECK(alg.root_vector(w121, 1) == WordElt::generator(2, 1));
  CHECK(alg.root_vector(w121, 3) == WordElt::generator(2, 2));

  // E_{alpha_1+alpha_2} for (1,2,1) is E2 E1 - q E1 E2; for (2,1,2) the
  // mirror image.  Norm of every root vector is (1-q^2)^{-1}.
  WordElt mid = alg.root_vector(w121, 2);
  WordElt expect = from_word(2, {2, 1}) + from_word(2, {1, 2}, -RationalFunction::q_power(1));
  CHECK(mid == expect);

  WordElt mid2 = alg.root_vector(w212, 2);
  WordElt expect2 = from_word(2, {1, 2}) + from_word(2, {2, 1}, -RationalFunction::q_power(1));
  CHECK(mid2 == expect2);

  for (const Word& w : {w121, w212})
    for (int t = 1; t <= 3; ++t) {
      WordElt v = alg.root_vector(w, t);
      RationalFunction norm;
      for (const auto& [word, c] : v.terms()) norm += c * pairing(v, word);
      CHECK(norm == e_norm());
    }
}

TEST_CASE("pbw monomials") {
  Algebra alg(2);
  CHECK(alg.pbw_monomial(w121, {1, 0, 0}) == alg.root_vector(w121, 1));
  CHECK(alg.pbw_monomial(w121, {0, 0, 0}) == WordElt::unit(2));

  WordElt sq = alg.pbw_monomial(w121, {2, 0, 0});
  CHECK(sq == from_word(2, {1, 1},
                        RationalFunction(1) / RationalFunction(qpbw::coeff::quantum_factorial(2))));
}

TEST_CASE("exponent enumeration") {
  Algebra alg(2);
  Root a{{1, 1}};
  auto exps = alg.exponents_of_weight(w121, a);
  CHECK(exps == std::vector<Exponent>{{0, 1, 0}, {1, 0, 1}});

  Root zero{{0, 0}};
  CHECK(alg.exponents_of_weight(w121, zero) == std::vector<Exponent>{{0, 0, 0}});

  Root neg{{-1, 0}};
  CHECK(alg.exponents_of_weight(w121, neg).empty());
}

TEST_CASE("gram matrix is diagonal with 1/psi entries") {
  Algebra alg(2);
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      Root wt{{a, b}};
      const Context& ctx = alg.context(w121, wt);
      for (size_t i = 0; i < ctx.exponents.size(); ++i)
        CHECK((ctx.gram[i] * ctx.psi_product[i]).is_one());
    }
}

TEST_CASE("to_pbw") {
  Algebra alg(2);
  // Round trip on monomials.
  for (const auto& m : std::vector<Exponent>{{1, 0, 1}, {0, 1, 0}, {2, 1, 0}, {0, 2, 2}}) {
    PBWVector v = alg.to_pbw(alg.pbw_monomial(w121, m), w121);
    CHECK(v.terms.size() == 1);
    CHECK(v.terms.begin()->first == m);
    CHECK(v.terms.begin()->second.is_one());
  }

  // E1 E2 is the PBW monomial E(1,0,1) itself.
  PBWVector v = alg.to_pbw(from_word(2, {1, 2}), w121);
  CHECK(v.terms.size() == 1);
  CHECK(v.terms.begin()->first == Exponent{1, 0, 1});

  // E2 E1 = E(0,1,0) + q E(1,0,1).
  PBWVector v2 = alg.to_pbw(from_word(2, {2, 1}), w121);
  CHECK(v2.terms.size() == 2);
  CHECK(v2.terms.at({0, 1, 0}).is_one());
  CHECK(v2.terms.at({1, 0, 1}) == RationalFunction::q_power(1));

  // Zero element.
  CHECK(alg.to_pbw(WordElt(2), w121).is_zero());
}

TEST_CASE("semantic zero via the Serre relation") {
  Algebra alg(2);
  // E1^2 E2 - [2] E1 E2 E1 + E2 E1^2 is zero in U+ but not syntactically.
  RationalFunction two(qpbw::coeff::quantum_integer(2));
  WordElt serre = from_word(2, {1, 1, 2}) + from_word(2, {1, 2, 1}, -two) +
                  from_word(2, {2, 1, 1});
  CHECK(!serre.empty());
  CHECK(alg.is_zero(serre));
  CHECK(alg.to_pbw(serre, w121).is_zero());

  WordElt nonzero = from_word(2, {1, 1, 2});
  CHECK(!alg.is_zero(nonzero));
}

TEST_CASE("from_pbw round trip") {
  Algebra alg(3);
  Word base = alg.base_word();
  WordElt x =
      mul(WordElt::generator(3, 2), mul(WordElt::generator(3, 1), WordElt::generator(3, 3)));
  PBWVector v = alg.to_pbw(x, base);
  CHECK(alg.equal(alg.from_pbw(v), x));
}

TEST_CASE("A3 contexts validate") {
  Algebra alg(3);
  Word base = alg.base_word();
  // Building any context asserts Gram diagonality and the 1/psi law.
  const Context& ctx = alg.context(base, Root{{1, 1, 1}});
  CHECK(ctx.exponents.size() > 1);
  const Context& ctx2 = alg.context(base, Root{{2, 2, 1}});
  CHECK(!ctx2.exponents.empty());
}

TEST_CASE("rank cap") { CHECK_THROWS_AS(Algebra(5), qpbw::CapacityError); }
