#include "umx/report.hpp"

#include <limits>

namespace umx {

using nlohmann::json;

json elem_json(const Elem& e) { return e.ring->to_string(e); }

json quad_json(const std::array<Elem, 4>& q) {
  const Ring& ring = q[0].ring;
  return json::array({ring->to_string(q[0]), ring->to_string(q[1]),
                      ring->to_string(q[2]), ring->to_string(q[3])});
}

json mat2_json(const Mat2& m) {
  const Ring& ring = m.ring();
  return json::array(
      {json::array({ring->to_string(m.a), ring->to_string(m.b)}),
       json::array({ring->to_string(m.c), ring->to_string(m.d)})});
}

json mat3_json(const Mat3& m) {
  const Ring& ring = m.ring();
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(ring->to_string(m.e[r * 3 + c]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matmn_json(const MatMN& m) {
  const Ring& ring = m.ring();
  json rows = json::array();
  for (const auto& row : m.rows) {
    json jr = json::array();
    for (const Elem& e : row) jr.push_back(ring->to_string(e));
    rows.push_back(std::move(jr));
  }
  return rows;
}

json int_json(const Int& v) {
  if (v >= 0 && v <= Int(std::numeric_limits<std::uint64_t>::max()))
    return v.convert_to<std::uint64_t>();
  return v.str();
}

json witness_json(const Witness& w) {
  json j;
  j["role"] = role_name(w.role());
  j["quad"] = quad_json(w.quad());
  if (w.v()) j["v"] = elem_json(*w.v());
  if (w.matrix()) j["matrix"] = mat2_json(*w.matrix());
  return j;
}

json opt_witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return witness_json(*w);
}

json classification_json(const Ring& ring, const Mat2& a,
                         const Classification& cls) {
  json j;
  j["ring"] = ring->name();
  j["matrix"] = mat2_json(a);
  j["unimodular"] = cls.unimodular;
  j["det"] = elem_json(cls.det);
  j["det_is_nilpotent"] = cls.det_is_nilpotent;
  j["det_is_zero_divisor"] = cls.det_is_zero_divisor;
  j["witnesses"] = {
      {"simply_extendable", opt_witness_json(cls.simply_extendable)},
      {"extendable", opt_witness_json(cls.extendable)},
      {"det_liftable", opt_witness_json(cls.det_liftable)},
      {"weakly_det_liftable", opt_witness_json(cls.weakly_det_liftable)},
      {"phi_root", opt_witness_json(cls.phi_root)}};
  return j;
}

json snf_json(const SnfResult& r) {
  json j;
  j["d"] = matmn_json(r.d);
  j["u"] = matmn_json(r.u);
  j["v"] = matmn_json(r.v);
  return j;
}

json hensel_json(const HenselLift& lift) {
  const Int prec = boost::multiprecision::pow(
      lift.t.z, static_cast<unsigned>(lift.precision_exponent));
  Int det_mod = det2(lift.b).z % prec;
  if (det_mod < 0) det_mod += prec;
  json j;
  j["B"] = mat2_json(lift.b);
  j["precision"] = int_json(prec);
  j["det_mod"] = int_json(det_mod);
  return j;
}

json nonfull_json(const NonFullFactorization& f) {
  json j;
  j["col"] = json::array({elem_json(f.col[0]), elem_json(f.col[1])});
  j["row"] = json::array({elem_json(f.row[0]), elem_json(f.row[1])});
  return j;
}

json extend_report(const Mat2& a) {
  const Ring& ring = a.ring();
  json j;
  j["ring"] = ring->name();
  j["matrix"] = mat2_json(a);
  if (ring->descriptor().kind == Kind::Integers) {
    Witness w = simple_extension_witness(a);
    const Elem v0 = ring->zero();
    j["extendable"] = true;
    j["quad"] = quad_json(w.quad());
    j["v"] = elem_json(v0);
    j["bordered"] = mat3_json(build_extension(a, w.quad(), v0));
    return j;
  }
  if (ring->finite()) {
    std::optional<Witness> w = decide_extendable(a);
    if (w) {
      j["extendable"] = true;
      j["quad"] = quad_json(w->quad());
      j["v"] = elem_json(*w->v());
      j["bordered"] = mat3_json(build_extension(a, w->quad(), *w->v()));
    } else {
      j["extendable"] = false;
    }
    return j;
  }
  fail(Err::UnsupportedRing,
       "unsupported ring for this subcommand: " + ring->name());
}

json detlift_report(const Mat2& a) {
  const Ring& ring = a.ring();
  json j;
  j["ring"] = ring->name();
  j["matrix"] = mat2_json(a);
  if (ring->descriptor().kind == Kind::Integers) {
    DetLiftResult r = det_lift_witness(a);
    j["det_liftable"] = true;
    j["quad"] = quad_json(r.witness.quad());
    j["b"] = mat2_json(r.b);
    return j;
  }
  if (ring->finite()) {
    std::optional<Witness> w = decide_det_liftable(a);
    if (w) {
      j["det_liftable"] = true;
      j["quad"] = quad_json(w->quad());
      j["b"] = mat2_json(companion(a, w->quad()).b);
    } else {
      j["det_liftable"] = false;
    }
    return j;
  }
  fail(Err::UnsupportedRing,
       "unsupported ring for this subcommand: " + ring->name());
}

json verify_report(const Mat2& a, const std::array<Elem, 4>& quad,
                   const std::string& role, const std::optional<Elem>& v) {
  const Ring& ring = a.ring();
  std::optional<Witness> w;
  if (role == "simple-extension") {
    w = Witness::simple_extension(a, quad);
  } else if (role == "extension") {
    const Elem vv = v ? *v : ring->zero();
    w = Witness::extension(a, quad, vv);
  } else if (role == "det-lift") {
    w = Witness::det_lift(a, quad);
  } else if (role == "phi-root") {
    w = Witness::phi_root(a, quad);
  } else if (role == "weak-lift-matrix") {
    w = Witness::weak_lift(a, quad, /*require_unimodular=*/false);
  } else {
    fail(Err::SyntaxError, "unknown witness role " + role);
  }
  json j;
  j["valid"] = true;
  j["role"] = role_name(w->role());
  j["ring"] = ring->name();
  j["matrix"] = mat2_json(a);
  j["quad"] = quad_json(quad);
  if (v) j["v"] = elem_json(*v);
  if (w->matrix()) j["b"] = mat2_json(*w->matrix());
  return j;
}

namespace {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Integers: return "integers";
    case Kind::Modular: return "modular";
    case Kind::GaloisPrime: return "galois-prime";
    case Kind::PolyOverPrime: return "poly-over-prime";
    case Kind::PolyQuotient: return "poly-quotient";
    case Kind::Product: return "product";
  }
  return "unknown";
}

}  // namespace

json ring_info_json(const Ring& ring) {
  json j;
  j["name"] = ring->name();
  j["kind"] = kind_name(ring->descriptor().kind);
  j["cardinality"] =
      ring->finite() ? int_json(ring->cardinality()) : json(nullptr);
  const Caps& c = ring->caps();
  j["caps"] = {{"is_finite", c.is_finite},
               {"is_bezout", c.is_bezout},
               {"is_euclidean", c.is_euclidean},
               {"is_domain", c.is_domain},
               {"is_reduced", c.is_reduced}};
  return j;
}

}  // namespace umx
