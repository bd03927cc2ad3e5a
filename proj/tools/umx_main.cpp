// umx — command-line front end for the 2x2 matrix-completion toolkit.
//
// Subcommands: classify, census, lift, snf, extend, detlift, nonfull, verify.
// Exit codes: 0 success, 1 domain error, 2 syntax/usage error. Every error is
// a single machine-parsable line "error: <Code>: <message>" on stderr.

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "umx/bezout.hpp"
#include "umx/census.hpp"
#include "umx/construct.hpp"
#include "umx/decide.hpp"
#include "umx/mat.hpp"
#include "umx/report.hpp"
#include "umx/ring.hpp"
#include "umx/ringspec.hpp"

namespace {

using namespace umx;
using nlohmann::json;

// ---------------------------------------------------------------------------
// shared plumbing

std::uint64_t budget_from_env() {
  const char* s = std::getenv("UMX_MAX_CARDINALITY");
  if (!s || !*s) return 12;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0)
    fail(Err::SyntaxError,
         "UMX_MAX_CARDINALITY must be a positive integer, got \"" +
             std::string(s) + "\"");
  return v;
}

// exhaustive subcommands refuse finite rings past the configured budget
void check_budget(const Ring& ring) {
  if (!ring->finite()) return;
  const std::uint64_t card = ring->card_u64();
  const std::uint64_t budget = budget_from_env();
  if (card > budget)
    fail(Err::BudgetExceeded,
         "ring cardinality " + std::to_string(card) +
             " exceeds UMX_MAX_CARDINALITY=" + std::to_string(budget));
}

Ring make_ring(const std::string& spec) {
  return ring_make(parse_ring_spec(spec));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(Err::PreconditionFailed, "cannot open output file " + out_path);
  f << text;
  f.flush();
  if (!f)
    fail(Err::PreconditionFailed, "failed writing output file " + out_path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// text rendering

std::string yn(bool b) { return b ? "true" : "false"; }

// flat reports render as "key: value" lines; arrays print compactly
// without string quotes, so elements keep their canonical spelling
std::string compact(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return yn(j.get<bool>());
  if (j.is_null()) return "absent";
  if (j.is_array()) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
      if (!first) s += ",";
      first = false;
      s += compact(e);
    }
    return s + "]";
  }
  return j.dump();
}

std::string kv_text(const json& j) {
  std::string s;
  for (const auto& [k, v] : j.items()) s += k + ": " + compact(v) + "\n";
  return s;
}

std::string quad_text(const std::array<Elem, 4>& q) {
  const Ring& ring = q[0].ring;
  return "[" + ring->to_string(q[0]) + "," + ring->to_string(q[1]) + "," +
         ring->to_string(q[2]) + "," + ring->to_string(q[3]) + "]";
}

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "absent";
  std::string s = quad_text(w->quad());
  if (w->v()) s += " with v=" + w->v()->ring->to_string(*w->v());
  if (w->matrix()) s += " giving B=" + to_string(*w->matrix());
  return s;
}

std::string census_text(const CensusReport& rep, bool timings) {
  std::string s;
  auto line = [&](const std::string& k, const std::string& v) {
    s += k + ": " + v + "\n";
  };
  line("ring", rep.ring);
  line("total_matrices", std::to_string(rep.total_matrices));
  line("unimodular_count", std::to_string(rep.unimodular_count));
  line("simply_extendable", std::to_string(rep.class_counts.simply_extendable));
  line("extendable", std::to_string(rep.class_counts.extendable));
  line("det_liftable", std::to_string(rep.class_counts.det_liftable));
  line("weakly_det_liftable",
       std::to_string(rep.class_counts.weakly_det_liftable));
  line("phi_root", std::to_string(rep.class_counts.phi_root));
  line("is_pi2", yn(rep.ring_flags.is_pi2));
  line("is_se2", yn(rep.ring_flags.is_se2));
  line("wj21_holds", yn(rep.ring_flags.wj21_holds));
  std::size_t passed = 0;
  for (const Verdict& v : rep.verdicts) passed += v.pass ? 1 : 0;
  s += "verdicts (" + std::to_string(rep.verdicts.size()) + " total, " +
       std::to_string(passed) + " passed):\n";
  for (const Verdict& v : rep.verdicts) {
    std::string tag = !v.applicable ? "[ n/a]" : v.pass ? "[pass]" : "[FAIL]";
    s += "  " + tag + " " + v.name;
    if (v.counterexample)
      s += "  counterexample " + to_string(*v.counterexample);
    s += "\n";
  }
  if (timings)
    s += "elapsed_seconds: " + std::to_string(rep.elapsed_seconds) + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// rectangular matrix literal "[[e,...],[e,...]]" for the snf subcommand;
// cells are Z / GF(p)[x] literals, which contain no commas or brackets

std::vector<std::vector<Elem>> parse_matrix_mn(const std::string& s,
                                               const Ring& ring) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c)
      fail(Err::SyntaxError,
           std::string("expected '") + c + "' in matrix literal",
           static_cast<std::ptrdiff_t>(i));
    ++i;
  };
  std::vector<std::vector<Elem>> rows;
  expect('[');
  while (true) {
    expect('[');
    std::vector<Elem> row;
    while (true) {
      skip_ws();
      const std::size_t start = i;
      while (i < s.size() && s[i] != ',' && s[i] != ']') ++i;
      if (i >= s.size())
        fail(Err::SyntaxError, "unterminated matrix row",
             static_cast<std::ptrdiff_t>(start));
      row.push_back(parse_element(s.substr(start, i - start), ring));
      if (s[i] == ']') {
        ++i;
        break;
      }
      ++i;  // ','
    }
    rows.push_back(std::move(row));
    skip_ws();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (i != s.size())
    fail(Err::SyntaxError, "trailing characters after matrix literal",
         static_cast<std::ptrdiff_t>(i));
  return rows;
}

// ---------------------------------------------------------------------------
// subcommand bodies; each returns the full output text

std::string run_classify(const std::string& ring_spec,
                         const std::string& matrix, const std::string& format) {
  Ring ring = make_ring(ring_spec);
  check_budget(ring);
  Mat2 a = parse_matrix2(matrix, ring);
  Classification cls = classify(a);
  if (format == "text") {
    std::string s;
    s += "ring: " + ring->name() + "\n";
    s += "matrix: " + to_string(a) + "\n";
    s += "unimodular: " + yn(cls.unimodular) + "\n";
    s += "det: " + ring->to_string(cls.det) + "\n";
    s += "det_is_nilpotent: " + yn(cls.det_is_nilpotent) + "\n";
    s += "det_is_zero_divisor: " + yn(cls.det_is_zero_divisor) + "\n";
    s += "simply_extendable: " + witness_text(cls.simply_extendable) + "\n";
    s += "extendable: " + witness_text(cls.extendable) + "\n";
    s += "det_liftable: " + witness_text(cls.det_liftable) + "\n";
    s += "weakly_det_liftable: " + witness_text(cls.weakly_det_liftable) + "\n";
    s += "phi_root: " + witness_text(cls.phi_root) + "\n";
    return s;
  }
  return dump(classification_json(ring, a, cls));
}

std::string run_census(const std::string& ring_spec, const std::string& format,
                       bool timings) {
  Ring ring = make_ring(ring_spec);
  CensusOptions opts;
  opts.max_cardinality = budget_from_env();
  CensusReport rep = ::umx::run_census(ring, opts);
  if (format == "csv") return census_to_csv(rep);
  if (format == "text") return census_text(rep, timings);
  return dump(census_to_json(rep, timings));
}

std::string run_lift(const std::string& ring_spec, const std::string& matrix,
                     const std::string& t_str, unsigned iters,
                     const std::string& format) {
  Ring ring = make_ring(ring_spec);
  Mat2 a = parse_matrix2(matrix, ring);
  Elem t = parse_element(t_str, ring);
  json j = hensel_json(hensel_det_lift(a, t, iters));
  return format == "text" ? kv_text(j) : dump(j);
}

std::string run_snf(const std::string& ring_spec, const std::string& matrix,
                    const std::string& format) {
  Ring ring = make_ring(ring_spec);
  const Kind kind = ring->descriptor().kind;
  if (kind != Kind::Integers && kind != Kind::PolyOverPrime)
    fail(Err::UnsupportedRing,
         "smith normal form needs Z or GF(p)[x], got " + ring->name());
  json j = snf_json(smith_normal_form(mat_mn(parse_matrix_mn(matrix, ring))));
  return format == "text" ? kv_text(j) : dump(j);
}

std::string run_extend(const std::string& ring_spec, const std::string& matrix,
                       const std::string& format) {
  Ring ring = make_ring(ring_spec);
  if (ring->finite()) check_budget(ring);
  Mat2 a = parse_matrix2(matrix, ring);
  json j = extend_report(a);
  return format == "text" ? kv_text(j) : dump(j);
}

std::string run_detlift(const std::string& ring_spec,
                        const std::string& matrix, const std::string& format) {
  Ring ring = make_ring(ring_spec);
  if (ring->finite()) check_budget(ring);
  Mat2 a = parse_matrix2(matrix, ring);
  json j = detlift_report(a);
  return format == "text" ? kv_text(j) : dump(j);
}

std::string run_nonfull(const std::string& ring_spec,
                        const std::string& matrix, const std::string& format) {
  Ring ring = make_ring(ring_spec);
  Mat2 a = parse_matrix2(matrix, ring);
  json j = nonfull_json(nonfull_factor(a));
  return format == "text" ? kv_text(j) : dump(j);
}

std::string run_verify(const std::string& ring_spec, const std::string& matrix,
                       const std::string& quad_str, const std::string& role,
                       const std::string& v_str, const std::string& format) {
  Ring ring = make_ring(ring_spec);
  Mat2 a = parse_matrix2(matrix, ring);
  std::array<Elem, 4> quad = parse_quad(quad_str, ring);
  std::optional<Elem> v;
  if (role == "extension")
    v = parse_element(v_str.empty() ? "0" : v_str, ring);
  json j = verify_report(a, quad, role, v);
  return format == "text" ? kv_text(j) : dump(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"umx — completions, determinant lifts and exhaustive censuses "
               "for unimodular 2x2 matrices over commutative rings"};
  app.require_subcommand(1);

  std::string ring_spec = "Z", matrix, format = "json", out_path;
  std::string t_str, quad_str, role, v_str;
  unsigned iters = 1;
  bool timings = false;

  auto add_common = [&](CLI::App* sub, bool ring_required, bool needs_matrix,
                        bool csv_ok) {
    auto* r = sub->add_option("--ring", ring_spec,
                              "ring spec, e.g. \"Z\", \"Z/12\", \"GF(3)\", "
                              "\"GF(2)[x]/(x^2+x+1)\", \"Z/4 x Z/3\"");
    if (ring_required)
      r->required();
    else
      r->capture_default_str();
    if (needs_matrix)
      sub->add_option("--matrix", matrix, "2x2 matrix literal [[a,b],[c,d]]")
          ->required();
    std::vector<std::string> formats =
        csv_ok ? std::vector<std::string>{"json", "csv", "text"}
               : std::vector<std::string>{"json", "text"};
    sub->add_option("--format", format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path, "write the output to this file");
  };

  CLI::App* c_classify = app.add_subcommand(
      "classify", "decide all five properties of a matrix over a finite ring");
  add_common(c_classify, true, true, false);

  CLI::App* c_census = app.add_subcommand(
      "census",
      "classify every unimodular 2x2 matrix over a finite ring and check "
      "the theorem verdicts");
  add_common(c_census, true, false, true);
  c_census->add_flag("--timings", timings,
                     "include elapsed_seconds in the report");

  CLI::App* c_lift = app.add_subcommand(
      "lift", "Hensel-lift the determinant of an integer matrix toward 0");
  add_common(c_lift, false, true, false);
  c_lift->add_option("--t", t_str, "base modulus t >= 2 dividing det(A)")
      ->required();
  c_lift->add_option("--iters", iters, "ladder rungs k (precision t^(2^k))")
      ->capture_default_str();

  CLI::App* c_snf = app.add_subcommand(
      "snf", "Smith normal form U*D*V = M over Z or GF(p)[x]");
  c_snf->add_option("--ring", ring_spec, "Z or GF(p)[x]")
      ->capture_default_str();
  c_snf->add_option("--matrix", matrix, "rectangular matrix literal")
      ->required();
  c_snf->add_option("--format", format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));
  c_snf->add_option("--out", out_path, "write the output to this file");

  CLI::App* c_extend = app.add_subcommand(
      "extend", "extend a unimodular matrix to a 3x3 determinant-1 matrix");
  add_common(c_extend, false, true, false);

  CLI::App* c_detlift = app.add_subcommand(
      "detlift", "find a unimodular determinant-0 lift congruent mod det(A)");
  add_common(c_detlift, false, true, false);

  CLI::App* c_nonfull = app.add_subcommand(
      "nonfull", "factor a zero-determinant matrix as column times row");
  add_common(c_nonfull, false, true, false);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "check a witness quadruple against its role equation");
  add_common(c_verify, false, true, false);
  c_verify->add_option("--quad", quad_str, "witness quadruple [x,y,z,w]")
      ->required();
  c_verify
      ->add_option("--role", role,
                   "witness role: simple-extension | extension | det-lift | "
                   "phi-root | weak-lift-matrix")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{
          "simple-extension", "extension", "det-lift", "phi-root",
          "weak-lift-matrix"}));
  c_verify->add_option("--v", v_str, "border corner v (extension role)");

  c_classify->callback(
      [&] { emit(run_classify(ring_spec, matrix, format), out_path); });
  c_census->callback(
      [&] { emit(run_census(ring_spec, format, timings), out_path); });
  c_lift->callback([&] {
    emit(run_lift(ring_spec, matrix, t_str, iters, format), out_path);
  });
  c_snf->callback([&] { emit(run_snf(ring_spec, matrix, format), out_path); });
  c_extend->callback(
      [&] { emit(run_extend(ring_spec, matrix, format), out_path); });
  c_detlift->callback(
      [&] { emit(run_detlift(ring_spec, matrix, format), out_path); });
  c_nonfull->callback(
      [&] { emit(run_nonfull(ring_spec, matrix, format), out_path); });
  c_verify->callback([&] {
    emit(run_verify(ring_spec, matrix, quad_str, role, v_str, format),
         out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UmxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Err::SyntaxError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
