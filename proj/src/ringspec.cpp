#include "umx/ringspec.hpp"

#include <cctype>

namespace umx {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_eat(c))
      fail(Err::SyntaxError,
           std::string("expected '") + c + "' in \"" + s + "\"",
           static_cast<std::ptrdiff_t>(pos));
  }
  bool try_word(const char* w) {
    skip_ws();
    size_t k = 0;
    while (w[k] && pos + k < s.size() && s[pos + k] == w[k]) ++k;
    if (w[k]) return false;
    pos += k;
    return true;
  }
  [[noreturn]] void err(const std::string& what) {
    fail(Err::SyntaxError, what + " in \"" + s + "\"",
         static_cast<std::ptrdiff_t>(pos));
  }

  Int parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      err("expected a number");
    Int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  Int parse_int() {
    skip_ws();
    bool negative = false;
    if (try_eat('-'))
      negative = true;
    else
      try_eat('+');
    Int v = parse_uint();
    return negative ? -v : v;
  }

  // signed sum of terms "c", "x", "x^k", "c*x^k" -> ascending coefficients
  std::vector<Int> parse_poly() {
    std::vector<Int> coeffs;
    auto bump = [&](size_t k, const Int& c) {
      if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
      coeffs[k] += c;
    };
    bool first = true;
    while (true) {
      skip_ws();
      Int sign = 1;
      if (try_eat('-')) {
        sign = -1;
      } else if (try_eat('+')) {
        // explicit plus
      } else if (!first) {
        break;
      }
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        Int c = parse_uint();
        if (try_eat('*')) {
          size_t k = parse_xpow();
          bump(k, sign * c);
        } else {
          bump(0, sign * c);
        }
      } else if (peek() == 'x') {
        size_t k = parse_xpow();
        bump(k, sign);
      } else {
        err("expected a polynomial term");
      }
      first = false;
    }
    if (first) err("expected a polynomial");
    return coeffs;
  }

  size_t parse_xpow() {
    skip_ws();
    if (peek() != 'x') err("expected 'x'");
    ++pos;
    if (try_eat('^')) {
      Int k = parse_uint();
      if (k > 64) err("exponent too large");
      return k.convert_to<size_t>();
    }
    return 1;
  }
};

RingDescriptor parse_ring_atom(Cursor& cur) {
  cur.skip_ws();
  if (cur.try_word("Z")) {
    if (cur.try_eat('/')) {
      return RingDescriptor::modular(cur.parse_uint());
    }
    return RingDescriptor::integers();
  }
  if (cur.try_word("GF")) {
    cur.expect('(');
    Int p = cur.parse_uint();
    cur.expect(')');
    size_t before = cur.pos;
    if (cur.try_eat('[')) {
      if (!cur.try_eat('x')) {
        cur.pos = before;
        cur.err("expected '[x]'");
      }
      cur.expect(']');
      if (cur.try_eat('/')) {
        cur.expect('(');
        std::vector<Int> f = cur.parse_poly();
        cur.expect(')');
        return RingDescriptor::poly_quotient(p, std::move(f));
      }
      return RingDescriptor::poly_over(p);
    }
    return RingDescriptor::galois(p);
  }
  cur.err("expected a ring ('Z', 'Z/n', 'GF(p)', ...)");
}

RingDescriptor parse_ring_inner(Cursor& cur) {
  std::vector<RingDescriptor> factors;
  factors.push_back(parse_ring_atom(cur));
  while (cur.peek() == 'x') {
    ++cur.pos;
    factors.push_back(parse_ring_atom(cur));
  }
  if (factors.size() == 1) return std::move(factors[0]);
  return RingDescriptor::product(std::move(factors));
}

Elem parse_element_inner(Cursor& cur, const Ring& ring) {
  Kind kind = ring->descriptor().kind;
  switch (kind) {
    case Kind::Integers:
    case Kind::Modular:
    case Kind::GaloisPrime:
      return ring->from_int(cur.parse_int());
    case Kind::PolyOverPrime:
    case Kind::PolyQuotient:
      return ring->from_poly(cur.parse_poly());
    case Kind::Product: {
      cur.expect('(');
      Elem e;
      e.ring = ring;
      const auto& factors = ring->factors();
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) cur.expect(',');
        e.comps.push_back(parse_element_inner(cur, factors[i]));
      }
      cur.expect(')');
      return e;
    }
  }
  cur.err("unsupported ring kind");
}

void expect_end(Cursor& cur) {
  if (!cur.done()) cur.err("trailing input");
}

}  // namespace

RingDescriptor parse_ring_spec(const std::string& s) {
  Cursor cur{s};
  RingDescriptor d = parse_ring_inner(cur);
  expect_end(cur);
  return d;
}

std::string ring_spec_string(const RingDescriptor& d) {
  return ring_make(d)->name();
}

Elem parse_element(const std::string& s, const Ring& ring) {
  Cursor cur{s};
  Elem e = parse_element_inner(cur, ring);
  expect_end(cur);
  return e;
}

std::array<Elem, 4> parse_quad(const std::string& s, const Ring& ring) {
  Cursor cur{s};
  cur.expect('[');
  std::array<Elem, 4> out;
  for (size_t i = 0; i < 4; ++i) {
    if (i) cur.expect(',');
    out[i] = parse_element_inner(cur, ring);
  }
  cur.expect(']');
  expect_end(cur);
  return out;
}

Mat2 parse_matrix2(const std::string& s, const Ring& ring) {
  Cursor cur{s};
  cur.expect('[');
  std::array<Elem, 4> e;
  for (size_t row = 0; row < 2; ++row) {
    if (row) cur.expect(',');
    cur.expect('[');
    for (size_t col = 0; col < 2; ++col) {
      if (col) cur.expect(',');
      e[2 * row + col] = parse_element_inner(cur, ring);
    }
    cur.expect(']');
  }
  cur.expect(']');
  expect_end(cur);
  return mat2(std::move(e[0]), std::move(e[1]), std::move(e[2]),
              std::move(e[3]));
}

Mat3 parse_matrix3(const std::string& s, const Ring& ring) {
  Cursor cur{s};
  cur.expect('[');
  std::array<Elem, 9> e;
  for (size_t row = 0; row < 3; ++row) {
    if (row) cur.expect(',');
    cur.expect('[');
    for (size_t col = 0; col < 3; ++col) {
      if (col) cur.expect(',');
      e[3 * row + col] = parse_element_inner(cur, ring);
    }
    cur.expect(']');
  }
  cur.expect(']');
  expect_end(cur);
  return mat3(std::move(e));
}

}  // namespace umx
