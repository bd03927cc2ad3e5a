#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umx {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// errors

enum class Err {
  InvalidDescriptor,
  MixedRings,
  UnsupportedRing,
  SyntaxError,
  LiteralOutOfRing,
  ShapeMismatch,
  WitnessInvalid,
  NotInvertible,
  NotUnimodular,
  InfiniteRing,
  PreconditionFailed,
  NonzeroDeterminant,
  NotDivisible,
  BudgetExceeded,
};

const char* err_name(Err e);

class UmxError : public std::runtime_error {
 public:
  UmxError(Err code, const std::string& msg, std::ptrdiff_t offset = -1)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code),
        offset_(offset) {}
  Err code() const { return code_; }
  const char* code_name() const { return err_name(code_); }
  // byte offset into the offending input for SyntaxError, else -1
  std::ptrdiff_t offset() const { return offset_; }

 private:
  Err code_;
  std::ptrdiff_t offset_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg,
                              std::ptrdiff_t offset = -1) {
  throw UmxError(code, msg, offset);
}

// ---------------------------------------------------------------------------
// descriptors

enum class Kind {
  Integers,       // Z
  Modular,        // Z/n, n >= 2
  GaloisPrime,    // GF(p), p prime
  PolyOverPrime,  // GF(p)[x]
  PolyQuotient,   // GF(p)[x]/(f), f monic of degree >= 1
  Product,        // R1 x R2 x ... (all finite)
};

struct RingDescriptor {
  Kind kind = Kind::Integers;
  Int n = 0;           // Modular modulus
  Int p = 0;           // characteristic for the GF kinds
  std::vector<Int> f;  // quotient modulus, ascending coefficients, monic
  std::vector<RingDescriptor> factors;  // Product factors

  bool operator==(const RingDescriptor&) const = default;

  static RingDescriptor integers() { return {}; }
  static RingDescriptor modular(Int n);
  static RingDescriptor galois(Int p);
  static RingDescriptor poly_over(Int p);
  static RingDescriptor poly_quotient(Int p, std::vector<Int> f);
  static RingDescriptor product(std::vector<RingDescriptor> factors);
};

struct Caps {
  bool is_finite = false;
  bool is_bezout = false;
  bool is_euclidean = false;
  bool is_domain = false;
  bool is_reduced = false;
};

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

// An element in canonical form, bound to its ring. Exactly one payload field
// is meaningful, selected by the ring's kind: `z` for Integers / Modular /
// GaloisPrime (residues reduced into [0, n)), `poly` for the GF(p)[x] kinds
// (ascending coefficients in [0, p), no trailing zeros), `comps` for Product.
struct Elem {
  Ring ring;
  Int z = 0;
  std::vector<Int> poly;
  std::vector<Elem> comps;

  bool operator==(const Elem& o) const {
    return z == o.z && poly == o.poly && comps == o.comps;
  }
  bool operator!=(const Elem& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// ring context

class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  const RingDescriptor& descriptor() const { return desc_; }
  const Caps& caps() const { return caps_; }
  bool finite() const { return caps_.is_finite; }
  // cardinality; throws InfiniteRing when the ring is infinite
  const Int& cardinality() const;
  // cardinality as a machine integer; throws BudgetExceeded when it does not fit
  std::uint64_t card_u64() const;
  // canonical spelling of the descriptor ("Z/12", "GF(2)[x]/(x^2+x+1)", ...)
  const std::string& name() const { return name_; }

  Elem zero() const;
  Elem one() const;
  // canonical image of an integer under the unique map Z -> R
  Elem from_int(const Int& v) const;
  // canonical element from ascending integer coefficients; coefficients in
  // degree >= 1 require a polynomial kind (LiteralOutOfRing otherwise)
  Elem from_poly(const std::vector<Int>& ascending) const;
  // Product factors (empty for every other kind)
  const std::vector<Ring>& factors() const { return factor_rings_; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;

  // inverse if a is a unit, else absent
  std::optional<Elem> is_unit(const Elem& a) const;
  // some q with b = a*q, else absent; finite rings scan in enumeration order
  // (so the returned q is the first one), Z and GF(p)[x] divide exactly
  std::optional<Elem> divides(const Elem& a, const Elem& b) const;
  bool is_nilpotent(const Elem& a) const;
  bool is_zero_divisor(const Elem& a) const;

  // enumeration contract (finite rings): Z/n and GF(p) run 0..n-1;
  // GF(p)[x]/(f) is indexed by base-p digits with the constant coefficient
  // least significant; Product is mixed-radix with the FIRST factor most
  // significant. All searches in this library scan in this order.
  Elem elem_at(std::uint64_t index) const;
  std::uint64_t index_of(const Elem& a) const;

  // canonical literal, re-parseable by ringspec
  std::string to_string(const Elem& a) const;

  // division with remainder for the Euclidean kinds (Z, GF(p)[x]);
  // |r| < |b| over Z (truncated) and deg r < deg b over GF(p)[x]
  std::pair<Elem, Elem> euclid_divmod(const Elem& a, const Elem& b) const;

  // throws MixedRings unless e belongs to a ring with this descriptor
  void check_mine(const Elem& e) const;

  ~RingContext() = default;
  RingContext(const RingContext&) = delete;
  RingContext& operator=(const RingContext&) = delete;

 private:
  explicit RingContext(RingDescriptor d);
  friend Ring ring_make(const RingDescriptor& d);

  Elem wrap(Int v) const;                 // canonical residue/integer payload
  Elem wrap_poly(std::vector<Int> cs) const;

  RingDescriptor desc_;
  Caps caps_;
  Int card_ = 0;  // 0 means infinite
  std::string name_;
  std::vector<Ring> factor_rings_;  // Product only
};

// validates the descriptor (including primality of p, monic f, finite product
// factors), flattens nested products, and computes the capability flags
Ring ring_make(const RingDescriptor& d);

// ---------------------------------------------------------------------------
// free operations

// (g, u, v) with u*a + v*b = g and g generating Ra + Rb. Supported for the
// Euclidean kinds and, via integer lifts, Modular / GaloisPrime; over Z the
// result is normalized to g >= 0 and over GF(p)[x] to monic g.
std::tuple<Elem, Elem, Elem> extended_gcd(const Elem& a, const Elem& b);

// coefficients c_i with sum c_i*v_i = 1, or absent. Over Z and GF(p)[x] this
// is a left fold of extended_gcd over the list (no early termination — the
// coefficient vector is part of the deterministic contract). Over finite
// rings: membership first (ideal closure), then the lexicographically first
// coefficient tuple in enumeration order.
std::optional<std::vector<Elem>> ideal_contains_one(const std::vector<Elem>& v);

// all elements of a finite ring in enumeration order
std::vector<Elem> enumerate_all(const Ring& ring);

// ---------------------------------------------------------------------------
// integer number theory helpers (exact, arbitrary precision)

bool is_prime(const Int& n);
// prime factorization as (prime, exponent) pairs, primes increasing
std::vector<std::pair<Int, int>> factorize(Int n);
bool is_squarefree(const Int& n);
Int radical(const Int& n);

}  // namespace umx
