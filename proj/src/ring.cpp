#include "umx/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "umx/table.hpp"

namespace umx {

const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidDescriptor: return "InvalidDescriptor";
    case Err::MixedRings: return "MixedRings";
    case Err::UnsupportedRing: return "UnsupportedRing";
    case Err::SyntaxError: return "SyntaxError";
    case Err::LiteralOutOfRing: return "LiteralOutOfRing";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::WitnessInvalid: return "WitnessInvalid";
    case Err::NotInvertible: return "NotInvertible";
    case Err::NotUnimodular: return "NotUnimodular";
    case Err::InfiniteRing: return "InfiniteRing";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::NonzeroDeterminant: return "NonzeroDeterminant";
    case Err::NotDivisible: return "NotDivisible";
    case Err::BudgetExceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------------------
// integer number theory

namespace {

Int mod_pow(Int base, Int exp, const Int& mod) {
  Int result = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (bit_test(exp, 0)) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_round(const Int& n, const Int& a, const Int& d, unsigned r) {
  Int x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while (!bit_test(d, 0)) {
    d >>= 1;
    ++r;
  }
  // deterministic for n < 3.3e24; overwhelming confidence beyond
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!miller_rabin_round(n, a, d, r)) return false;
  }
  return true;
}

namespace {

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(n % 1000003));
  while (true) {
    Int c = Int(rng() % 1000000) + 1;
    Int x = Int(rng() % 1000000) + 2;
    Int y = x, d = 1;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with new c
      d = gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 0) n = -n;
  if (n <= 1) return {};
  std::vector<Int> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

bool is_squarefree(const Int& n) {
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return false;
  }
  return true;
}

Int radical(const Int& n) {
  Int r = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    r *= p;
  }
  return r;
}

// ---------------------------------------------------------------------------
// polynomial helpers over GF(p): ascending coefficient vectors, canonical
// (coefficients in [0, p), no trailing zeros)

namespace {

using Poly = std::vector<Int>;

Int imod(Int v, const Int& p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

Poly pnorm(Poly a, const Int& p) {
  for (Int& c : a) c = imod(c, p);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly padd(const Poly& a, const Poly& b, const Int& p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return pnorm(std::move(out), p);
}

Poly pneg(const Poly& a, const Int& p) {
  Poly out = a;
  for (Int& c : out) c = imod(-c, p);
  return pnorm(std::move(out), p);
}

Poly psub(const Poly& a, const Poly& b, const Int& p) {
  return padd(a, pneg(b, p), p);
}

Poly pmul(const Poly& a, const Poly& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return pnorm(std::move(out), p);
}

Int inv_mod_prime(const Int& c, const Int& p) { return mod_pow(c, p - 2, p); }

// division with remainder; b nonzero
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, const Int& p) {
  if (b.empty()) fail(Err::PreconditionFailed, "polynomial division by zero");
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  Int lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Int coef = a.back() * lead_inv % p;
    q[shift] = coef;
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = imod(a[shift + i] - coef * b[i], p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return {pnorm(std::move(q), p), std::move(a)};
}

Poly pscale(const Poly& a, const Int& s, const Int& p) {
  Poly out = a;
  for (Int& c : out) c = c * s % p;
  return pnorm(std::move(out), p);
}

Poly pmonic(const Poly& a, const Int& p) {
  if (a.empty()) return a;
  return pscale(a, inv_mod_prime(a.back(), p), p);
}

Poly pgcd(Poly a, Poly b, const Int& p) {
  while (!b.empty()) {
    Poly r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

Poly pderiv(const Poly& a, const Int& p) {
  Poly out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Int(i) % p);
  return pnorm(std::move(out), p);
}

Poly pmodpow(Poly base, Int exp, const Poly& f, const Int& p) {
  Poly result{1};
  base = pdivmod(std::move(base), f, p).second;
  while (exp > 0) {
    if (bit_test(exp, 0)) result = pdivmod(pmul(result, base, p), f, p).second;
    base = pdivmod(pmul(base, base, p), f, p).second;
    exp >>= 1;
  }
  return result;
}

// Rabin irreducibility test for monic f of degree d over GF(p):
// x^(p^d) = x mod f and gcd(x^(p^(d/l)) - x, f) = 1 for every prime l | d
bool pirreducible(const Poly& f, const Int& p) {
  size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  Poly x{0, 1};
  std::vector<size_t> prime_divisors;
  size_t m = d;
  for (size_t l = 2; l * l <= m; ++l) {
    if (m % l == 0) {
      prime_divisors.push_back(l);
      while (m % l == 0) m /= l;
    }
  }
  if (m > 1) prime_divisors.push_back(m);
  for (size_t l : prime_divisors) {
    Int e = 1;
    for (size_t i = 0; i < d / l; ++i) e *= p;
    Poly g = pgcd(psub(pmodpow(x, e, f, p), x, p), f, p);
    if (g.size() != 1) return false;
  }
  Int e = 1;
  for (size_t i = 0; i < d; ++i) e *= p;
  return pmodpow(x, e, f, p) == x;
}

std::string poly_to_string(const Poly& a) {
  if (a.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = a.size(); k-- > 0;) {
    if (a[k] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (k == 0) {
      out << a[k].str();
    } else {
      if (a[k] != 1) out << a[k].str() << "*";
      if (k == 1) {
        out << "x";
      } else {
        out << "x^" << k;
      }
    }
  }
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// descriptors

RingDescriptor RingDescriptor::modular(Int n) {
  RingDescriptor d;
  d.kind = Kind::Modular;
  d.n = std::move(n);
  return d;
}

RingDescriptor RingDescriptor::galois(Int p) {
  RingDescriptor d;
  d.kind = Kind::GaloisPrime;
  d.p = std::move(p);
  return d;
}

RingDescriptor RingDescriptor::poly_over(Int p) {
  RingDescriptor d;
  d.kind = Kind::PolyOverPrime;
  d.p = std::move(p);
  return d;
}

RingDescriptor RingDescriptor::poly_quotient(Int p, std::vector<Int> f) {
  RingDescriptor d;
  d.kind = Kind::PolyQuotient;
  d.p = std::move(p);
  d.f = std::move(f);
  return d;
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  RingDescriptor d;
  d.kind = Kind::Product;
  d.factors = std::move(factors);
  return d;
}

// ---------------------------------------------------------------------------
// ring context

RingContext::RingContext(RingDescriptor d) : desc_(std::move(d)) {}

Ring ring_make(const RingDescriptor& d) {
  RingDescriptor desc = d;
  // nested products are flattened so that "A x B x C" has one canonical shape
  if (desc.kind == Kind::Product) {
    std::vector<RingDescriptor> flat;
    for (const RingDescriptor& f : desc.factors) {
      if (f.kind == Kind::Product) {
        for (const RingDescriptor& g : f.factors) flat.push_back(g);
      } else {
        flat.push_back(f);
      }
    }
    desc.factors = std::move(flat);
  }

  auto ctx = std::shared_ptr<RingContext>(new RingContext(desc));
  Caps& caps = ctx->caps_;
  switch (desc.kind) {
    case Kind::Integers:
      caps = {false, true, true, true, true};
      ctx->card_ = 0;
      ctx->name_ = "Z";
      break;
    case Kind::Modular: {
      if (desc.n < 2) fail(Err::InvalidDescriptor, "modulus must be >= 2");
      caps.is_finite = true;
      caps.is_bezout = true;  // every f.g. ideal of Z/n is principal
      caps.is_euclidean = false;
      caps.is_domain = is_prime(desc.n);
      caps.is_reduced = is_squarefree(desc.n);
      ctx->card_ = desc.n;
      ctx->name_ = "Z/" + desc.n.str();
      break;
    }
    case Kind::GaloisPrime: {
      if (!is_prime(desc.p)) fail(Err::InvalidDescriptor, "GF(p) needs prime p");
      caps = {true, true, true, true, true};
      ctx->card_ = desc.p;
      ctx->name_ = "GF(" + desc.p.str() + ")";
      break;
    }
    case Kind::PolyOverPrime: {
      if (!is_prime(desc.p))
        fail(Err::InvalidDescriptor, "GF(p)[x] needs prime p");
      caps = {false, true, true, true, true};
      ctx->card_ = 0;
      ctx->name_ = "GF(" + desc.p.str() + ")[x]";
      break;
    }
    case Kind::PolyQuotient: {
      if (!is_prime(desc.p))
        fail(Err::InvalidDescriptor, "GF(p)[x]/(f) needs prime p");
      Poly f = pnorm(desc.f, desc.p);
      if (f.size() < 2 || f.back() != 1)
        fail(Err::InvalidDescriptor,
             "quotient modulus must be monic of degree >= 1");
      ctx->desc_.f = f;
      caps.is_finite = true;
      caps.is_bezout = true;  // quotient of the PID GF(p)[x]
      caps.is_euclidean = false;
      caps.is_domain = pirreducible(f, desc.p);
      caps.is_reduced = pgcd(f, pderiv(f, desc.p), desc.p).size() == 1;
      Int card = 1;
      for (size_t i = 1; i < f.size(); ++i) card *= desc.p;
      ctx->card_ = card;
      ctx->name_ = "GF(" + desc.p.str() + ")[x]/(" + poly_to_string(f) + ")";
      break;
    }
    case Kind::Product: {
      if (desc.factors.size() < 2)
        fail(Err::InvalidDescriptor, "product needs at least two factors");
      caps = {true, true, false, false, true};
      ctx->card_ = 1;
      std::string nm;
      for (const RingDescriptor& fd : desc.factors) {
        Ring fr = ring_make(fd);
        if (!fr->finite())
          fail(Err::InvalidDescriptor, "product factors must be finite rings");
        caps.is_reduced = caps.is_reduced && fr->caps().is_reduced;
        caps.is_bezout = caps.is_bezout && fr->caps().is_bezout;
        ctx->card_ *= fr->cardinality();
        if (!nm.empty()) nm += " x ";
        nm += fr->name();
        ctx->factor_rings_.push_back(std::move(fr));
      }
      ctx->name_ = nm;
      break;
    }
  }
  return ctx;
}

const Int& RingContext::cardinality() const {
  if (!caps_.is_finite) fail(Err::InfiniteRing, "ring " + name_ + " is infinite");
  return card_;
}

std::uint64_t RingContext::card_u64() const {
  const Int& c = cardinality();
  if (c > Int(UINT64_MAX))
    fail(Err::BudgetExceeded, "cardinality of " + name_ + " too large");
  return c.convert_to<std::uint64_t>();
}

void RingContext::check_mine(const Elem& e) const {
  if (!e.ring) fail(Err::MixedRings, "element without ring");
  if (e.ring.get() == this) return;
  if (e.ring->desc_ == desc_) return;
  fail(Err::MixedRings,
       "element of " + e.ring->name_ + " used in " + name_);
}

Elem RingContext::wrap(Int v) const {
  Elem e;
  e.ring = shared_from_this();
  e.z = std::move(v);
  return e;
}

Elem RingContext::wrap_poly(std::vector<Int> cs) const {
  Elem e;
  e.ring = shared_from_this();
  e.poly = std::move(cs);
  return e;
}

Elem RingContext::zero() const {
  switch (desc_.kind) {
    case Kind::Integers:
    case Kind::Modular:
    case Kind::GaloisPrime:
      return wrap(0);
    case Kind::PolyOverPrime:
    case Kind::PolyQuotient:
      return wrap_poly({});
    case Kind::Product: {
      Elem e;
      e.ring = shared_from_this();
      for (const Ring& f : factor_rings_) e.comps.push_back(f->zero());
      return e;
    }
  }
  fail(Err::UnsupportedRing, "zero");
}

Elem RingContext::one() const { return from_int(1); }

Elem RingContext::from_int(const Int& v) const {
  switch (desc_.kind) {
    case Kind::Integers:
      return wrap(v);
    case Kind::Modular:
      return wrap(imod(v, desc_.n));
    case Kind::GaloisPrime:
      return wrap(imod(v, desc_.p));
    case Kind::PolyOverPrime:
    case Kind::PolyQuotient: {
      Int c = imod(v, desc_.p);
      if (c == 0) return wrap_poly({});
      return wrap_poly({c});
    }
    case Kind::Product: {
      Elem e;
      e.ring = shared_from_this();
      for (const Ring& f : factor_rings_) e.comps.push_back(f->from_int(v));
      return e;
    }
  }
  fail(Err::UnsupportedRing, "from_int");
}

Elem RingContext::from_poly(const std::vector<Int>& ascending) const {
  switch (desc_.kind) {
    case Kind::PolyOverPrime:
      return wrap_poly(pnorm(ascending, desc_.p));
    case Kind::PolyQuotient:
      return wrap_poly(
          pdivmod(pnorm(ascending, desc_.p), desc_.f, desc_.p).second);
    default: {
      for (size_t i = 1; i < ascending.size(); ++i) {
        if (ascending[i] != 0)
          fail(Err::LiteralOutOfRing,
               "polynomial literal not valid in " + name_);
      }
      return from_int(ascending.empty() ? Int(0) : ascending[0]);
    }
  }
}

Elem RingContext::add(const Elem& a, const Elem& b) const {
  check_mine(a);
  check_mine(b);
  switch (desc_.kind) {
    case Kind::Integers:
      return wrap(a.z + b.z);
    case Kind::Modular:
      return wrap(imod(a.z + b.z, desc_.n));
    case Kind::GaloisPrime:
      return wrap(imod(a.z + b.z, desc_.p));
    case Kind::PolyOverPrime:
      return wrap_poly(padd(a.poly, b.poly, desc_.p));
    case Kind::PolyQuotient:
      return wrap_poly(padd(a.poly, b.poly, desc_.p));
    case Kind::Product: {
      Elem e;
      e.ring = shared_from_this();
      for (size_t i = 0; i < factor_rings_.size(); ++i)
        e.comps.push_back(factor_rings_[i]->add(a.comps[i], b.comps[i]));
      return e;
    }
  }
  fail(Err::UnsupportedRing, "add");
}

Elem RingContext::neg(const Elem& a) const {
  check_mine(a);
  switch (desc_.kind) {
    case Kind::Integers:
      return wrap(-a.z);
    case Kind::Modular:
      return wrap(imod(-a.z, desc_.n));
    case Kind::GaloisPrime:
      return wrap(imod(-a.z, desc_.p));
    case Kind::PolyOverPrime:
    case Kind::PolyQuotient:
      return wrap_poly(pneg(a.poly, desc_.p));
    case Kind::Product: {
      Elem e;
      e.ring = shared_from_this();
      for (size_t i = 0; i < factor_rings_.size(); ++i)
        e.comps.push_back(factor_rings_[i]->neg(a.comps[i]));
      return e;
    }
  }
  fail(Err::UnsupportedRing, "neg");
}

Elem RingContext::sub(const Elem& a, const Elem& b) const {
  return add(a, neg(b));
}

Elem RingContext::mul(const Elem& a, const Elem& b) const {
  check_mine(a);
  check_mine(b);
  switch (desc_.kind) {
    case Kind::Integers:
      return wrap(a.z * b.z);
    case Kind::Modular:
      return wrap(a.z * b.z % desc_.n);
    case Kind::GaloisPrime:
      return wrap(a.z * b.z % desc_.p);
    case Kind::PolyOverPrime:
      return wrap_poly(pmul(a.poly, b.poly, desc_.p));
    case Kind::PolyQuotient:
      return wrap_poly(pdivmod(pmul(a.poly, b.poly, desc_.p), desc_.f, desc_.p).second);
    case Kind::Product: {
      Elem e;
      e.ring = shared_from_this();
      for (size_t i = 0; i < factor_rings_.size(); ++i)
        e.comps.push_back(factor_rings_[i]->mul(a.comps[i], b.comps[i]));
      return e;
    }
  }
  fail(Err::UnsupportedRing, "mul");
}

bool RingContext::is_zero(const Elem& a) const {
  check_mine(a);
  return a == zero();
}

bool RingContext::is_one(const Elem& a) const {
  check_mine(a);
  return a == one();
}

namespace {

// iterative extended Euclid; returns (g, u, v) with u*a + v*b = g;
// g carries the sign/leading coefficient produced by the algorithm
std::tuple<Int, Int, Int> iegcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  return {old_r, old_s, old_t};
}

std::tuple<Poly, Poly, Poly> pegcd(Poly a, Poly b, const Int& p) {
  Poly old_r = std::move(a), r = std::move(b);
  Poly old_s{1}, s{}, old_t{}, t{1};
  while (!r.empty()) {
    auto [q, rem] = pdivmod(old_r, r, p);
    old_r = std::move(r);
    r = std::move(rem);
    Poly ns = psub(old_s, pmul(q, s, p), p);
    old_s = std::move(s);
    s = std::move(ns);
    Poly nt = psub(old_t, pmul(q, t, p), p);
    old_t = std::move(t);
    t = std::move(nt);
  }
  return {old_r, old_s, old_t};
}

}  // namespace

std::optional<Elem> RingContext::is_unit(const Elem& a) const {
  check_mine(a);
  switch (desc_.kind) {
    case Kind::Integers:
      if (a.z == 1 || a.z == -1) return wrap(a.z);
      return std::nullopt;
    case Kind::Modular:
    case Kind::GaloisPrime: {
      const Int& n = desc_.kind == Kind::Modular ? desc_.n : desc_.p;
      auto [g, u, v] = iegcd(a.z, n);
      (void)v;
      if (g == 1) return wrap(imod(u, n));
      if (g == -1) return wrap(imod(-u, n));
      return std::nullopt;
    }
    case Kind::PolyOverPrime: {
      if (a.poly.size() != 1) return std::nullopt;
      return wrap_poly({inv_mod_prime(a.poly[0], desc_.p)});
    }
    case Kind::PolyQuotient: {
      auto [g, u, v] = pegcd(a.poly, desc_.f, desc_.p);
      (void)v;
      if (g.size() != 1) return std::nullopt;
      Poly inv = pscale(u, inv_mod_prime(g[0], desc_.p), desc_.p);
      return wrap_poly(pdivmod(std::move(inv), desc_.f, desc_.p).second);
    }
    case Kind::Product: {
      Elem e;
      e.ring = shared_from_this();
      for (size_t i = 0; i < factor_rings_.size(); ++i) {
        auto inv = factor_rings_[i]->is_unit(a.comps[i]);
        if (!inv) return std::nullopt;
        e.comps.push_back(std::move(*inv));
      }
      return e;
    }
  }
  return std::nullopt;
}

std::optional<Elem> RingContext::divides(const Elem& a, const Elem& b) const {
  check_mine(a);
  check_mine(b);
  switch (desc_.kind) {
    case Kind::Integers: {
      if (a.z == 0) {
        if (b.z == 0) return wrap(0);
        return std::nullopt;
      }
      if (b.z % a.z != 0) return std::nullopt;
      return wrap(b.z / a.z);
    }
    case Kind::PolyOverPrime: {
      if (a.poly.empty()) {
        if (b.poly.empty()) return wrap_poly({});
        return std::nullopt;
      }
      auto [q, r] = pdivmod(b.poly, a.poly, desc_.p);
      if (!r.empty()) return std::nullopt;
      return wrap_poly(std::move(q));
    }
    default: {
      // finite kinds: first q in enumeration order with a*q = b
      std::uint64_t n = card_u64();
      for (std::uint64_t i = 0; i < n; ++i) {
        Elem q = elem_at(i);
        if (mul(a, q) == b) return q;
      }
      return std::nullopt;
    }
  }
}

bool RingContext::is_nilpotent(const Elem& a) const {
  check_mine(a);
  switch (desc_.kind) {
    case Kind::Integers:
    case Kind::GaloisPrime:
    case Kind::PolyOverPrime:
      return is_zero(a);
    case Kind::Modular: {
      // nilpotent iff rad(n) | a iff a^bits(n) = 0 (exponents in n are
      // bounded by its bit length)
      if (a.z == 0) return true;
      Int e = Int(msb(desc_.n)) + 1;
      return mod_pow(a.z, e, desc_.n) == 0;
    }
    case Kind::PolyQuotient: {
      if (a.poly.empty()) return true;
      Int e = Int(desc_.f.size() - 1);
      return pmodpow(a.poly, e, desc_.f, desc_.p).empty();
    }
    case Kind::Product: {
      for (size_t i = 0; i < factor_rings_.size(); ++i) {
        if (!factor_rings_[i]->is_nilpotent(a.comps[i])) return false;
      }
      return true;
    }
  }
  return false;
}

bool RingContext::is_zero_divisor(const Elem& a) const {
  check_mine(a);
  switch (desc_.kind) {
    case Kind::Integers:
    case Kind::GaloisPrime:
    case Kind::PolyOverPrime:
      return is_zero(a);
    case Kind::Modular:
      return gcd(a.z, desc_.n) != 1;
    default: {
      std::uint64_t n = card_u64();
      Elem zr = zero();
      for (std::uint64_t i = 1; i < n; ++i) {
        Elem b = elem_at(i);
        if (mul(a, b) == zr) return true;
      }
      return false;
    }
  }
}

Elem RingContext::elem_at(std::uint64_t index) const {
  switch (desc_.kind) {
    case Kind::Modular:
    case Kind::GaloisPrime:
      return wrap(Int(index));
    case Kind::PolyQuotient: {
      Poly cs;
      std::uint64_t p = desc_.p.convert_to<std::uint64_t>();
      size_t deg = desc_.f.size() - 1;
      for (size_t i = 0; i < deg; ++i) {
        cs.push_back(Int(index % p));
        index /= p;
      }
      return wrap_poly(pnorm(std::move(cs), desc_.p));
    }
    case Kind::Product: {
      std::vector<Elem> comps(factor_rings_.size());
      for (size_t i = factor_rings_.size(); i-- > 0;) {
        std::uint64_t ni = factor_rings_[i]->card_u64();
        comps[i] = factor_rings_[i]->elem_at(index % ni);
        index /= ni;
      }
      Elem e;
      e.ring = shared_from_this();
      e.comps = std::move(comps);
      return e;
    }
    default:
      fail(Err::InfiniteRing, "cannot enumerate " + name_);
  }
}

std::uint64_t RingContext::index_of(const Elem& a) const {
  check_mine(a);
  switch (desc_.kind) {
    case Kind::Modular:
    case Kind::GaloisPrime:
      return a.z.convert_to<std::uint64_t>();
    case Kind::PolyQuotient: {
      std::uint64_t p = desc_.p.convert_to<std::uint64_t>();
      std::uint64_t idx = 0, mult = 1;
      size_t deg = desc_.f.size() - 1;
      for (size_t i = 0; i < deg; ++i) {
        if (i < a.poly.size()) idx += a.poly[i].convert_to<std::uint64_t>() * mult;
        mult *= p;
      }
      return idx;
    }
    case Kind::Product: {
      std::uint64_t idx = 0;
      for (size_t i = 0; i < factor_rings_.size(); ++i) {
        idx = idx * factor_rings_[i]->card_u64() +
              factor_rings_[i]->index_of(a.comps[i]);
      }
      return idx;
    }
    default:
      fail(Err::InfiniteRing, "cannot index elements of " + name_);
  }
}

std::string RingContext::to_string(const Elem& a) const {
  check_mine(a);
  switch (desc_.kind) {
    case Kind::Integers:
    case Kind::Modular:
    case Kind::GaloisPrime:
      return a.z.str();
    case Kind::PolyOverPrime:
    case Kind::PolyQuotient:
      return poly_to_string(a.poly);
    case Kind::Product: {
      std::string out = "(";
      for (size_t i = 0; i < factor_rings_.size(); ++i) {
        if (i) out += ",";
        out += factor_rings_[i]->to_string(a.comps[i]);
      }
      return out + ")";
    }
  }
  fail(Err::UnsupportedRing, "to_string");
}

std::pair<Elem, Elem> RingContext::euclid_divmod(const Elem& a,
                                                 const Elem& b) const {
  check_mine(a);
  check_mine(b);
  switch (desc_.kind) {
    case Kind::Integers: {
      if (b.z == 0) fail(Err::PreconditionFailed, "division by zero");
      return {wrap(a.z / b.z), wrap(a.z % b.z)};
    }
    case Kind::PolyOverPrime: {
      auto [q, r] = pdivmod(a.poly, b.poly, desc_.p);
      return {wrap_poly(std::move(q)), wrap_poly(std::move(r))};
    }
    default:
      fail(Err::UnsupportedRing,
           "division with remainder needs a Euclidean ring, not " + name_);
  }
}

// ---------------------------------------------------------------------------
// free operations

std::tuple<Elem, Elem, Elem> extended_gcd(const Elem& a, const Elem& b) {
  if (!a.ring) fail(Err::MixedRings, "element without ring");
  const RingContext& R = *a.ring;
  R.check_mine(b);
  switch (R.descriptor().kind) {
    case Kind::Integers: {
      if (a.z == 0 && b.z == 0)
        return {a.ring->from_int(0), a.ring->from_int(0), a.ring->from_int(0)};
      auto [g, u, v] = iegcd(a.z, b.z);
      if (g < 0) {
        g = -g;
        u = -u;
        v = -v;
      }
      return {a.ring->from_int(g), a.ring->from_int(u), a.ring->from_int(v)};
    }
    case Kind::Modular:
    case Kind::GaloisPrime: {
      // on canonical integer lifts; the identity descends mod n
      auto [g, u, v] = iegcd(a.z, b.z);
      if (g < 0) {
        g = -g;
        u = -u;
        v = -v;
      }
      return {a.ring->from_int(g), a.ring->from_int(u), a.ring->from_int(v)};
    }
    case Kind::PolyOverPrime: {
      const Int& p = R.descriptor().p;
      auto [g, u, v] = pegcd(a.poly, b.poly, p);
      if (!g.empty() && g.back() != 1) {
        Int s = inv_mod_prime(g.back(), p);
        g = pscale(g, s, p);
        u = pscale(u, s, p);
        v = pscale(v, s, p);
      }
      Elem eg, eu, ev;
      eg.ring = eu.ring = ev.ring = a.ring;
      eg.poly = std::move(g);
      eu.poly = std::move(u);
      ev.poly = std::move(v);
      return {eg, eu, ev};
    }
    default:
      fail(Err::UnsupportedRing,
           "extended_gcd needs Z, GF(p), Z/n or GF(p)[x], not " + R.name());
  }
}

std::optional<std::vector<Elem>> ideal_contains_one(
    const std::vector<Elem>& v) {
  if (v.empty()) fail(Err::PreconditionFailed, "empty generator list");
  const Ring ring = v[0].ring;
  if (!ring) fail(Err::MixedRings, "element without ring");
  for (const Elem& e : v) ring->check_mine(e);
  Kind kind = ring->descriptor().kind;

  if (kind == Kind::Integers || kind == Kind::PolyOverPrime) {
    // left fold of extended_gcd; coefficients rewritten at every step,
    // never terminated early — the exact vector is part of the contract
    Elem g = v[0];
    std::vector<Elem> coeffs{ring->one()};
    for (size_t i = 1; i < v.size(); ++i) {
      auto [g2, u, w] = extended_gcd(g, v[i]);
      for (Elem& c : coeffs) c = ring->mul(c, u);
      coeffs.push_back(w);
      g = g2;
    }
    auto inv = ring->is_unit(g);
    if (!inv) return std::nullopt;
    if (!ring->is_one(g)) {
      for (Elem& c : coeffs) c = ring->mul(c, *inv);
    }
    return coeffs;
  }

  // finite rings: membership via the ideal closure, then the
  // lexicographically first coefficient tuple in enumeration order
  std::uint64_t n = ring->card_u64();
  if (n <= FiniteRingTable::kMaxCardinality) {
    // same computation at index level; first-hit order is identical because
    // table indices follow the ring's enumeration order
    const FiniteRingTable& T = table_for(ring);
    const std::uint32_t nn = T.n();
    std::vector<std::uint32_t> gens;
    gens.reserve(v.size());
    for (const Elem& gen : v)
      gens.push_back(static_cast<std::uint32_t>(ring->index_of(gen)));

    std::vector<std::uint32_t> mult;
    mult.reserve(gens.size() * nn);
    for (std::uint32_t g : gens)
      for (std::uint32_t r = 0; r < nn; ++r) mult.push_back(T.mul(r, g));
    std::sort(mult.begin(), mult.end());
    mult.erase(std::unique(mult.begin(), mult.end()), mult.end());

    std::vector<char> seen(nn, 0);
    seen[T.zero()] = 1;
    std::vector<std::uint32_t> frontier{T.zero()};
    while (!frontier.empty()) {
      std::uint32_t s = frontier.back();
      frontier.pop_back();
      for (std::uint32_t m : mult) {
        std::uint32_t t = T.add(s, m);
        if (!seen[t]) {
          seen[t] = 1;
          frontier.push_back(t);
        }
      }
    }
    if (!seen[T.one()]) return std::nullopt;

    std::vector<std::uint32_t> idx(v.size(), 0);
    while (true) {
      std::uint32_t s = T.zero();
      for (std::size_t i = 0; i < gens.size(); ++i)
        s = T.add(s, T.mul(idx[i], gens[i]));
      if (s == T.one()) {
        std::vector<Elem> out;
        out.reserve(idx.size());
        for (std::uint32_t i : idx) out.push_back(ring->elem_at(i));
        return out;
      }
      std::size_t pos = idx.size();
      while (pos > 0) {
        --pos;
        if (++idx[pos] < nn) break;
        idx[pos] = 0;
        if (pos == 0) return std::nullopt;  // unreachable: membership held
      }
    }
  }

  std::vector<Elem> elems;
  elems.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) elems.push_back(ring->elem_at(i));

  std::unordered_set<std::uint64_t> closure{ring->index_of(ring->zero())};
  std::vector<std::uint64_t> frontier(closure.begin(), closure.end());
  std::vector<std::uint64_t> mult_indices;
  for (const Elem& gen : v) {
    for (std::uint64_t r = 0; r < n; ++r) {
      mult_indices.push_back(ring->index_of(ring->mul(elems[r], gen)));
    }
  }
  std::sort(mult_indices.begin(), mult_indices.end());
  mult_indices.erase(std::unique(mult_indices.begin(), mult_indices.end()),
                     mult_indices.end());
  while (!frontier.empty()) {
    std::uint64_t s = frontier.back();
    frontier.pop_back();
    for (std::uint64_t m : mult_indices) {
      std::uint64_t t = ring->index_of(ring->add(elems[s], elems[m]));
      if (closure.insert(t).second) frontier.push_back(t);
    }
  }
  std::uint64_t one_idx = ring->index_of(ring->one());
  if (!closure.count(one_idx)) return std::nullopt;

  // lexicographic scan, first coefficient most significant
  std::vector<std::uint64_t> idx(v.size(), 0);
  Elem one = ring->one();
  while (true) {
    Elem s = ring->zero();
    for (size_t i = 0; i < v.size(); ++i)
      s = ring->add(s, ring->mul(elems[idx[i]], v[i]));
    if (s == one) {
      std::vector<Elem> out;
      for (std::uint64_t i : idx) out.push_back(elems[i]);
      return out;
    }
    size_t pos = v.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) return std::nullopt;  // unreachable: membership held
    }
  }
}

std::vector<Elem> enumerate_all(const Ring& ring) {
  std::uint64_t n = ring->card_u64();
  std::vector<Elem> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(ring->elem_at(i));
  return out;
}

}  // namespace umx
