#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "umx/ring.hpp"

using namespace umx;

namespace {

Ring Z() { return ring_make(RingDescriptor::integers()); }
Ring Zn(int n) { return ring_make(RingDescriptor::modular(n)); }
Ring GFp(int p) { return ring_make(RingDescriptor::galois(p)); }
Ring GFpx(int p) { return ring_make(RingDescriptor::poly_over(p)); }
Ring GF4() {
  return ring_make(RingDescriptor::poly_quotient(2, {1, 1, 1}));  // x^2+x+1
}
Ring Z2xZ3() {
  return ring_make(RingDescriptor::product(
      {RingDescriptor::modular(2), RingDescriptor::modular(3)}));
}

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(ring_make(RingDescriptor::modular(1)), UmxError);
  CHECK_THROWS_AS(ring_make(RingDescriptor::modular(0)), UmxError);
  CHECK_THROWS_AS(ring_make(RingDescriptor::galois(4)), UmxError);
  CHECK_THROWS_AS(ring_make(RingDescriptor::galois(1)), UmxError);
  CHECK_THROWS_AS(ring_make(RingDescriptor::poly_over(6)), UmxError);
  // non-monic quotient modulus
  CHECK_THROWS_AS(ring_make(RingDescriptor::poly_quotient(3, {1, 2})),
                  UmxError);
  // degree-zero quotient modulus
  CHECK_THROWS_AS(ring_make(RingDescriptor::poly_quotient(2, {1})), UmxError);
  // infinite factor in a product
  CHECK_THROWS_AS(ring_make(RingDescriptor::product(
                      {RingDescriptor::integers(), RingDescriptor::modular(2)})),
                  UmxError);
  // products need at least two factors
  CHECK_THROWS_AS(ring_make(RingDescriptor::product({RingDescriptor::modular(2)})),
                  UmxError);
}

TEST_CASE("capability flags follow the descriptor") {
  Ring z = Z();
  CHECK(z->caps().is_euclidean);
  CHECK(z->caps().is_bezout);
  CHECK(z->caps().is_domain);
  CHECK(z->caps().is_reduced);
  CHECK_FALSE(z->finite());
  CHECK_THROWS_AS(z->cardinality(), UmxError);  // InfiniteRing

  Ring z6 = Zn(6);
  CHECK(z6->finite());
  CHECK(z6->caps().is_reduced);        // 6 squarefree
  CHECK_FALSE(z6->caps().is_domain);   // 6 not prime
  CHECK(z6->cardinality() == 6);

  Ring z4 = Zn(4);
  CHECK_FALSE(z4->caps().is_reduced);
  CHECK_FALSE(z4->caps().is_domain);

  Ring z5 = Zn(5);
  CHECK(z5->caps().is_domain);
  CHECK(z5->caps().is_reduced);

  Ring f3 = GFp(3);
  CHECK(f3->caps().is_domain);
  CHECK(f3->caps().is_reduced);
  CHECK(f3->cardinality() == 3);

  Ring fx = GFpx(2);
  CHECK(fx->caps().is_euclidean);
  CHECK(fx->caps().is_domain);
  CHECK_FALSE(fx->finite());

  Ring gf4 = GF4();
  CHECK(gf4->finite());
  CHECK(gf4->cardinality() == 4);
  CHECK(gf4->caps().is_reduced);  // x^2+x+1 squarefree over GF(2)

  Ring dual = ring_make(RingDescriptor::poly_quotient(2, {0, 0, 1}));  // x^2
  CHECK_FALSE(dual->caps().is_reduced);
  CHECK(dual->cardinality() == 4);

  Ring prod = Z2xZ3();
  CHECK(prod->finite());
  CHECK(prod->cardinality() == 6);
  CHECK(prod->caps().is_reduced);
  CHECK_FALSE(prod->caps().is_domain);  // products are never domains
}

TEST_CASE("canonical ring names") {
  CHECK(Z()->name() == "Z");
  CHECK(Zn(12)->name() == "Z/12");
  CHECK(GFp(3)->name() == "GF(3)");
  CHECK(GFpx(2)->name() == "GF(2)[x]");
  CHECK(GF4()->name() == "GF(2)[x]/(x^2+x+1)");
  CHECK(Z2xZ3()->name() == "Z/2 x Z/3");
}

TEST_CASE("modular arithmetic is canonical") {
  Ring z6 = Zn(6);
  Elem a = z6->from_int(4), b = z6->from_int(5);
  CHECK(z6->add(a, b) == z6->from_int(3));
  CHECK(z6->mul(a, b) == z6->from_int(2));
  CHECK(z6->neg(a) == z6->from_int(2));
  CHECK(z6->sub(a, b) == z6->from_int(5));
  CHECK(z6->from_int(-1) == z6->from_int(5));
  CHECK(z6->from_int(600) == z6->zero());
  CHECK(z6->is_one(z6->from_int(7)));
}

TEST_CASE("polynomial quotient arithmetic reduces mod f") {
  Ring gf4 = GF4();
  Elem x = gf4->from_poly({0, 1});
  // x^2 = x + 1 in GF(4)
  CHECK(gf4->mul(x, x) == gf4->from_poly({1, 1}));
  // x * (x+1) = x^2 + x = 1
  CHECK(gf4->mul(x, gf4->from_poly({1, 1})) == gf4->one());
  Ring dual = ring_make(RingDescriptor::poly_quotient(2, {0, 0, 1}));
  Elem xx = dual->from_poly({0, 1});
  CHECK(dual->is_zero(dual->mul(xx, xx)));
  CHECK(dual->is_nilpotent(xx));
  CHECK_FALSE(dual->is_nilpotent(dual->one()));
}

TEST_CASE("product arithmetic is componentwise") {
  Ring prod = Z2xZ3();
  Elem a = prod->from_int(1);  // (1,1)
  Elem b = prod->add(a, a);    // (0,2)
  CHECK(prod->to_string(b) == "(0,2)");
  CHECK(prod->to_string(prod->mul(b, b)) == "(0,1)");
  CHECK(prod->is_zero(prod->mul(b, prod->from_int(3))));  // (0,2)*(1,0)=(0,0)
}

TEST_CASE("units, zero divisors and nilpotents") {
  Ring z6 = Zn(6);
  CHECK(z6->is_unit(z6->from_int(5)).has_value());
  CHECK(*z6->is_unit(z6->from_int(5)) == z6->from_int(5));
  CHECK_FALSE(z6->is_unit(z6->from_int(2)).has_value());
  CHECK(z6->is_zero_divisor(z6->from_int(2)));
  CHECK_FALSE(z6->is_zero_divisor(z6->from_int(5)));
  CHECK_FALSE(z6->is_nilpotent(z6->from_int(2)));  // Z/6 reduced
  Ring z8 = Zn(8);
  CHECK(z8->is_nilpotent(z8->from_int(2)));
  CHECK(z8->is_zero_divisor(z8->from_int(2)));
  Ring z = Z();
  CHECK(z->is_unit(z->from_int(-1)).has_value());
  CHECK_FALSE(z->is_unit(z->from_int(2)).has_value());
  CHECK_FALSE(z->is_zero_divisor(z->from_int(2)));
}

TEST_CASE("divides returns the first quotient in enumeration order") {
  Ring z6 = Zn(6);
  // 3*q = 3 has solutions q in {1,3,5}; the first is 1
  auto q = z6->divides(z6->from_int(3), z6->from_int(3));
  REQUIRE(q.has_value());
  CHECK(*q == z6->one());
  // 2*q = 3 unsolvable mod 6
  CHECK_FALSE(z6->divides(z6->from_int(2), z6->from_int(3)).has_value());
  Ring z = Z();
  auto q2 = z->divides(z->from_int(2), z->from_int(6));
  REQUIRE(q2.has_value());
  CHECK(*q2 == z->from_int(3));
  CHECK_FALSE(z->divides(z->from_int(2), z->from_int(7)).has_value());
  // everything divides zero, nothing but zero divides out of zero
  CHECK(z->divides(z->from_int(0), z->from_int(0)).has_value());
  CHECK_FALSE(z->divides(z->from_int(0), z->from_int(3)).has_value());
}

TEST_CASE("enumeration order contract") {
  Ring z6 = Zn(6);
  for (std::uint64_t i = 0; i < 6; ++i) {
    CHECK(z6->elem_at(i) == z6->from_int(static_cast<int>(i)));
    CHECK(z6->index_of(z6->elem_at(i)) == i);
  }
  // GF(4): base-p digits, constant coefficient least significant
  Ring gf4 = GF4();
  CHECK(gf4->elem_at(0) == gf4->zero());
  CHECK(gf4->elem_at(1) == gf4->one());
  CHECK(gf4->elem_at(2) == gf4->from_poly({0, 1}));  // x
  CHECK(gf4->elem_at(3) == gf4->from_poly({1, 1}));  // x+1
  // product: mixed radix, FIRST factor most significant
  Ring prod = Z2xZ3();
  CHECK(prod->to_string(prod->elem_at(0)) == "(0,0)");
  CHECK(prod->to_string(prod->elem_at(1)) == "(0,1)");
  CHECK(prod->to_string(prod->elem_at(2)) == "(0,2)");
  CHECK(prod->to_string(prod->elem_at(3)) == "(1,0)");
  CHECK(prod->to_string(prod->elem_at(5)) == "(1,2)");
  for (std::uint64_t i = 0; i < 6; ++i) CHECK(prod->index_of(prod->elem_at(i)) == i);
  // indices beyond the cardinality wrap around (mixed-radix reduction)
  CHECK(prod->elem_at(6) == prod->elem_at(0));
  CHECK(prod->elem_at(7) == prod->elem_at(1));

  std::vector<Elem> all = enumerate_all(gf4);
  CHECK(all.size() == 4);
  CHECK_THROWS_AS(enumerate_all(Z()), UmxError);
}

TEST_CASE("euclidean division with remainder") {
  Ring z = Z();
  auto [q, r] = z->euclid_divmod(z->from_int(-7), z->from_int(2));
  // truncated division: -7 = -3*2 + (-1)
  CHECK(q == z->from_int(-3));
  CHECK(r == z->from_int(-1));
  auto [q2, r2] = z->euclid_divmod(z->from_int(7), z->from_int(2));
  CHECK(q2 == z->from_int(3));
  CHECK(r2 == z->from_int(1));
  CHECK_THROWS_AS(z->euclid_divmod(z->one(), z->zero()), UmxError);

  Ring fx = GFpx(2);
  // (x^3 + x + 1) = (x)(x^2 + 1) + 1 over GF(2)
  Elem a = fx->from_poly({1, 1, 0, 1});
  Elem b = fx->from_poly({1, 0, 1});
  auto [pq, pr] = fx->euclid_divmod(a, b);
  CHECK(pq == fx->from_poly({0, 1}));
  CHECK(pr == fx->one());

  CHECK_THROWS_AS(Zn(6)->euclid_divmod(Zn(6)->one(), Zn(6)->one()), UmxError);
}

TEST_CASE("extended gcd") {
  Ring z = Z();
  auto [g, u, v] = extended_gcd(z->from_int(12), z->from_int(18));
  CHECK(g == z->from_int(6));
  CHECK(z->add(z->mul(u, z->from_int(12)), z->mul(v, z->from_int(18))) == g);
  auto [g2, u2, v2] = extended_gcd(z->from_int(-4), z->from_int(6));
  CHECK(g2 == z->from_int(2));  // normalized nonnegative
  CHECK(z->add(z->mul(u2, z->from_int(-4)), z->mul(v2, z->from_int(6))) == g2);

  Ring fx = GFpx(3);
  Elem a = fx->from_poly({2, 0, 1});  // x^2+2
  Elem b = fx->from_poly({2, 1});     // x+2
  auto [pg, pu, pv] = extended_gcd(a, b);
  CHECK(fx->add(fx->mul(pu, a), fx->mul(pv, b)) == pg);
  if (!fx->is_zero(pg)) CHECK(pg.poly.back() == 1);  // monic

  // Z/n works through integer lifts
  Ring z6 = Zn(6);
  auto [mg, mu, mv] = extended_gcd(z6->from_int(4), z6->from_int(3));
  CHECK(z6->add(z6->mul(mu, z6->from_int(4)), z6->mul(mv, z6->from_int(3))) ==
        mg);

  CHECK_THROWS_AS(extended_gcd(Z2xZ3()->one(), Z2xZ3()->one()), UmxError);
}

TEST_CASE("ideal_contains_one over euclidean rings folds extended_gcd") {
  Ring z = Z();
  std::vector<Elem> gens{z->from_int(6), z->from_int(10), z->from_int(15)};
  auto cs = ideal_contains_one(gens);
  REQUIRE(cs.has_value());
  REQUIRE(cs->size() == 3);
  Elem s = z->zero();
  for (std::size_t i = 0; i < 3; ++i)
    s = z->add(s, z->mul((*cs)[i], gens[i]));
  CHECK(z->is_one(s));
  CHECK_FALSE(
      ideal_contains_one({z->from_int(6), z->from_int(10)}).has_value());
  CHECK_FALSE(ideal_contains_one({z->zero()}).has_value());
  CHECK_THROWS_AS(ideal_contains_one({}), UmxError);
}

TEST_CASE("ideal_contains_one over finite rings is lex-first") {
  Ring z6 = Zn(6);
  std::vector<Elem> gens{z6->from_int(2), z6->from_int(3)};
  auto cs = ideal_contains_one(gens);
  REQUIRE(cs.has_value());
  Elem s = z6->zero();
  for (std::size_t i = 0; i < 2; ++i)
    s = z6->add(s, z6->mul((*cs)[i], gens[i]));
  CHECK(z6->is_one(s));
  // lexicographically first solution of 2a + 3b = 1 mod 6 is (2, 1)
  CHECK((*cs)[0] == z6->from_int(2));
  CHECK((*cs)[1] == z6->from_int(1));
  CHECK_FALSE(ideal_contains_one({z6->from_int(2), z6->from_int(4)}).has_value());

  Ring prod = Z2xZ3();
  // (1,0) and (0,1) generate the unit ideal
  auto pc = ideal_contains_one({prod->from_int(3), prod->from_int(4)});
  REQUIRE(pc.has_value());
  Elem ps = prod->add(prod->mul((*pc)[0], prod->from_int(3)),
                      prod->mul((*pc)[1], prod->from_int(4)));
  CHECK(prod->is_one(ps));
}

TEST_CASE("mixed-ring elements are rejected") {
  Ring z2 = Zn(2), z3 = Zn(3);
  CHECK_THROWS_AS(z2->add(z2->one(), z3->one()), UmxError);
  CHECK_THROWS_AS(z2->check_mine(z3->one()), UmxError);
  // two independently made contexts with one descriptor interoperate
  Ring z2b = Zn(2);
  CHECK(z2->add(z2->one(), z2b->one()) == z2->zero());
}

TEST_CASE("from_poly outside polynomial kinds is rejected") {
  CHECK_THROWS_AS(Z()->from_poly({0, 1}), UmxError);
  CHECK_THROWS_AS(Zn(6)->from_poly({1, 2}), UmxError);
  CHECK(Z()->from_poly({5}) == Z()->from_int(5));  // constants are fine
}

TEST_CASE("integer number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7*13
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Int, int>{2, 3});
  CHECK(f[1] == std::pair<Int, int>{3, 2});
  CHECK(f[2] == std::pair<Int, int>{5, 1});
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(radical(360) == 30);
}

TEST_CASE("cardinality beyond the machine budget is reported") {
  Ring big = ring_make(RingDescriptor::modular(Int("5000")));
  CHECK(big->card_u64() == 5000);
  CHECK(big->cardinality() == 5000);
}
