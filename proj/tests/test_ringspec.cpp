#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "umx/ringspec.hpp"

using namespace umx;

namespace {

Ring make(const std::string& s) { return ring_make(parse_ring_spec(s)); }

std::uint64_t offset_of(const std::string& spec) {
  try {
    parse_ring_spec(spec);
  } catch (const UmxError& e) {
    return e.offset();
  }
  return static_cast<std::uint64_t>(-1);
}

}  // namespace

TEST_CASE("ring spec round trips through its canonical spelling") {
  const char* specs[] = {
      "Z",
      "Z/2",
      "Z/12",
      "GF(3)",
      "GF(2)[x]",
      "GF(2)[x]/(x^2+x+1)",
      "GF(2)[x]/(x^2)",
      "GF(3)[x]/(x^3+2*x+1)",
      "Z/2 x Z/3",
      "Z/4 x Z/3",
      "Z/2 x Z/2 x GF(3)",
      "Z/2 x GF(2)[x]/(x^2+x+1)",
  };
  for (const char* s : specs) {
    CAPTURE(s);
    RingDescriptor d = parse_ring_spec(s);
    std::string canon = ring_spec_string(d);
    CHECK(parse_ring_spec(canon) == d);
    // canonical spelling is a fixed point
    CHECK(ring_spec_string(parse_ring_spec(canon)) == canon);
  }
  CHECK(ring_spec_string(parse_ring_spec("  Z/6  ")) == "Z/6");
  CHECK(ring_spec_string(parse_ring_spec("GF( 5 )")) == "GF(5)");
}

TEST_CASE("ring spec syntax errors carry byte offsets") {
  CHECK_THROWS_AS(parse_ring_spec(""), UmxError);
  CHECK_THROWS_AS(parse_ring_spec("Q"), UmxError);
  CHECK_THROWS_AS(parse_ring_spec("Z/"), UmxError);
  CHECK_THROWS_AS(parse_ring_spec("Z/6junk"), UmxError);
  CHECK_THROWS_AS(parse_ring_spec("Z/2 x"), UmxError);
  // the offset points at the first offending character
  CHECK(offset_of("Q") == 0);
  CHECK(offset_of("Z/6junk") == 3);
  // well-formed but invalid descriptors are rejected when the ring is made
  CHECK_THROWS_AS(make("GF(6)"), UmxError);    // not prime
  CHECK_THROWS_AS(make("Z/1"), UmxError);      // modulus too small
  CHECK_THROWS_AS(make("Z x Z/2"), UmxError);  // infinite factor
  try {
    make("GF(6)");
    CHECK(false);
  } catch (const UmxError& e) {
    CHECK(e.code() == Err::InvalidDescriptor);
  }
}

TEST_CASE("element literals over the base rings") {
  Ring z = make("Z");
  CHECK(parse_element("42", z) == z->from_int(42));
  CHECK(parse_element("-7", z) == z->from_int(-7));
  CHECK(parse_element(" 0 ", z) == z->zero());

  Ring z6 = make("Z/6");
  CHECK(parse_element("11", z6) == z6->from_int(5));
  CHECK(parse_element("-1", z6) == z6->from_int(5));

  Ring gf4 = make("GF(2)[x]/(x^2+x+1)");
  CHECK(parse_element("x", gf4) == gf4->from_poly({0, 1}));
  CHECK(parse_element("x+1", gf4) == gf4->from_poly({1, 1}));
  CHECK(parse_element("x^2", gf4) == gf4->from_poly({1, 1}));  // reduced
  CHECK(parse_element("1+x+x", gf4) == gf4->one());

  Ring fx = make("GF(3)[x]");
  CHECK(parse_element("2*x^2+x+1", fx) == fx->from_poly({1, 1, 2}));
  CHECK(parse_element("x-1", fx) == fx->from_poly({2, 1}));
  CHECK(parse_element("4*x", fx) == fx->from_poly({0, 1}));
}

TEST_CASE("element literals over products use tuples") {
  Ring prod = make("Z/2 x Z/3");
  Elem e = parse_element("(1,2)", prod);
  CHECK(prod->to_string(e) == "(1,2)");
  CHECK(parse_element("( 0 , 0 )", prod) == prod->zero());
  CHECK(parse_element("(1,1)", prod) == prod->one());
  // arity mismatch
  CHECK_THROWS_AS(parse_element("(1,2,0)", prod), UmxError);
  CHECK_THROWS_AS(parse_element("(1)", prod), UmxError);
  // bare integers are not accepted over products; tuples are mandatory
  CHECK_THROWS_AS(parse_element("5", prod), UmxError);
}

TEST_CASE("element parse errors") {
  Ring z = make("Z");
  CHECK_THROWS_AS(parse_element("", z), UmxError);
  CHECK_THROWS_AS(parse_element("2+", z), UmxError);
  CHECK_THROWS_AS(parse_element("abc", z), UmxError);
  CHECK_THROWS_AS(parse_element("x", z), UmxError);  // no x over Z
  Ring z6 = make("Z/6");
  CHECK_THROWS_AS(parse_element("x+1", z6), UmxError);
  try {
    parse_element("3 3", z);
    CHECK(false);
  } catch (const UmxError& e) {
    CHECK(e.code() == Err::SyntaxError);
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("quadruple literals") {
  Ring z6 = make("Z/6");
  auto q = parse_quad("[1, 2, 3, 4]", z6);
  CHECK(q[0] == z6->from_int(1));
  CHECK(q[1] == z6->from_int(2));
  CHECK(q[2] == z6->from_int(3));
  CHECK(q[3] == z6->from_int(4));
  CHECK_THROWS_AS(parse_quad("[1,2,3]", z6), UmxError);
  CHECK_THROWS_AS(parse_quad("[1,2,3,4,5]", z6), UmxError);
  CHECK_THROWS_AS(parse_quad("1,2,3,4", z6), UmxError);
  Ring prod = make("Z/2 x Z/3");
  auto pq = parse_quad("[(1,1),(0,0),(0,1),(1,0)]", prod);
  CHECK(prod->to_string(pq[2]) == "(0,1)");
}

TEST_CASE("matrix literals") {
  Ring z = make("Z");
  Mat2 a = parse_matrix2("[[1, 2], [3, 4]]", z);
  CHECK(a.a == z->from_int(1));
  CHECK(a.b == z->from_int(2));
  CHECK(a.c == z->from_int(3));
  CHECK(a.d == z->from_int(4));

  Mat3 m = parse_matrix3("[[1,2,3],[4,5,6],[7,8,9]]", z);
  CHECK(m.e[0] == z->from_int(1));
  CHECK(m.e[5] == z->from_int(6));  // row 1, col 2
  CHECK(m.e[7] == z->from_int(8));  // row 2, col 1

  Ring gf4 = make("GF(2)[x]/(x^2+x+1)");
  Mat2 g = parse_matrix2("[[x,x+1],[1,0]]", gf4);
  CHECK(g.b == gf4->from_poly({1, 1}));

  Ring prod = make("Z/2 x Z/3");
  Mat2 p = parse_matrix2("[[(1,1),(0,0)],[(0,0),(1,1)]]", prod);
  CHECK(p.a == prod->one());
  CHECK(p.b == prod->zero());

  CHECK_THROWS_AS(parse_matrix2("[[1,2],[3]]", z), UmxError);
  CHECK_THROWS_AS(parse_matrix2("[[1,2],[3,4]", z), UmxError);
  CHECK_THROWS_AS(parse_matrix2("[[1,2],[3,4]]x", z), UmxError);
  CHECK_THROWS_AS(parse_matrix2("[[1,2,3],[4,5,6],[7,8,9]]", z), UmxError);
  CHECK_THROWS_AS(parse_matrix3("[[1,2],[3,4]]", z), UmxError);
}

TEST_CASE("parser never crashes on random input") {
  std::mt19937_64 rng(0x5eedULL);
  const std::string alphabet = "Zx/()[],+-*^0123456789 GF";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  Ring z6 = make("Z/6");
  for (int iter = 0; iter < 20000; ++iter) {
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
    try {
      parse_ring_spec(s);
    } catch (const UmxError&) {
    }
    try {
      parse_element(s, z6);
    } catch (const UmxError&) {
    }
    try {
      parse_matrix2(s, z6);
    } catch (const UmxError&) {
    }
  }
  CHECK(true);  // reaching here means no crash and no foreign exception
}
