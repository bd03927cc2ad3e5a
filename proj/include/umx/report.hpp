#pragma once

#include <array>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "umx/bezout.hpp"
#include "umx/construct.hpp"
#include "umx/decide.hpp"
#include "umx/mat.hpp"
#include "umx/ring.hpp"

namespace umx {

// JSON rendering shared by the CLI and the python bindings. Elements print
// as canonical literal strings; nlohmann objects keep keys sorted, so equal
// inputs serialize to identical bytes.

nlohmann::json elem_json(const Elem& e);
nlohmann::json quad_json(const std::array<Elem, 4>& q);
nlohmann::json mat2_json(const Mat2& m);
nlohmann::json mat3_json(const Mat3& m);
nlohmann::json matmn_json(const MatMN& m);
// numbers that fit in uint64 stay numeric; larger values decay to strings
nlohmann::json int_json(const Int& v);
nlohmann::json witness_json(const Witness& w);
nlohmann::json opt_witness_json(const std::optional<Witness>& w);

// {ring, matrix, unimodular, det, det_is_nilpotent, det_is_zero_divisor,
//  witnesses: {simply_extendable, extendable, det_liftable,
//              weakly_det_liftable, phi_root}} — absent witnesses are null
nlohmann::json classification_json(const Ring& ring, const Mat2& a,
                                   const Classification& cls);

// {d, u, v} as nested string arrays
nlohmann::json snf_json(const SnfResult& r);

// {B, det_mod, precision} with precision = t^(2^k)
nlohmann::json hensel_json(const HenselLift& lift);

// {col, row}
nlohmann::json nonfull_json(const NonFullFactorization& f);

// runs the extension construction: synthesis over Z, exhaustive search over
// finite rings, UnsupportedRing otherwise; callers enforce any search budget
nlohmann::json extend_report(const Mat2& a);

// same dispatch for determinant lifts
nlohmann::json detlift_report(const Mat2& a);

// rebuilds the witness through its verifying factory (WitnessInvalid when
// the role equation fails) and reports it
nlohmann::json verify_report(const Mat2& a, const std::array<Elem, 4>& quad,
                             const std::string& role,
                             const std::optional<Elem>& v);

// {name, kind, cardinality (number or null), caps{...}}
nlohmann::json ring_info_json(const Ring& ring);

}  // namespace umx
