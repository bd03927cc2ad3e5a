// Acceptance gate: ten independent criteria, one PASS/FAIL line each.
// All checks are exact (zero tolerance) — every quantity is ring arithmetic,
// so there is nothing to approximate. Randomized criteria use fixed seeds.
// argv[1] (optional, supplied by ctest) is the CLI binary for criterion 10.

#include <sys/wait.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "golden_values.hpp"
#include "umx/bezout.hpp"
#include "umx/census.hpp"
#include "umx/decide.hpp"
#include "umx/ringspec.hpp"

using namespace umx;

namespace {

std::string g_cli;  // path to the command-line binary, may be empty

Ring make(const std::string& s) { return ring_make(parse_ring_spec(s)); }

Mat2 m2i(const Ring& r, long long a, long long b, long long c, long long d) {
  return mat2(r->from_int(a), r->from_int(b), r->from_int(c), r->from_int(d));
}

// classify every unimodular matrix of a finite ring, in parallel, cached
const std::vector<MatrixRecord>& classified(const std::string& ring_name) {
  static std::map<std::string, std::vector<MatrixRecord>> cache;
  auto it = cache.find(ring_name);
  if (it != cache.end()) return it->second;

  Ring ring = make(ring_name);
  std::vector<Mat2> ums = enumerate_um2(ring);
  std::vector<MatrixRecord> recs(ums.size());
  unsigned nthreads = std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    constexpr std::size_t kChunk = 64;
    while (true) {
      const std::size_t lo = cursor.fetch_add(kChunk);
      if (lo >= ums.size()) return;
      const std::size_t hi = std::min(ums.size(), lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i)
        recs[i] = MatrixRecord{ums[i], classify(ums[i])};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return cache.emplace(ring_name, std::move(recs)).first->second;
}

const std::vector<std::string> kLatticeRings = {
    "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/7", "Z/8",
    "GF(2)[x]/(x^2+x+1)", "GF(2)[x]/(x^2)", "Z/2 x Z/2", "Z/4 x Z/3"};

// does Phi_A attain a nilpotent value anywhere on R^4?
bool phi_attains_nilpotent(const Ring& r, const Mat2& a) {
  const std::uint64_t n = r->card_u64();
  std::array<Elem, 4> q{r->zero(), r->zero(), r->zero(), r->zero()};
  for (std::uint64_t x = 0; x < n; ++x) {
    q[0] = r->elem_at(x);
    for (std::uint64_t y = 0; y < n; ++y) {
      q[1] = r->elem_at(y);
      for (std::uint64_t z = 0; z < n; ++z) {
        q[2] = r->elem_at(z);
        for (std::uint64_t w = 0; w < n; ++w) {
          q[3] = r->elem_at(w);
          if (r->is_nilpotent(phi_eval(a, q))) return true;
        }
      }
    }
  }
  return false;
}

// --------------------------------------------------------------------------
// criteria; each returns true on success and may append detail on failure

bool criterion_detlift_agreement(std::string& note) {
  for (const std::string& name : kLatticeRings)
    for (const MatrixRecord& r : classified(name))
      if (r.cls.det_liftable.has_value() !=
          r.cls.det_liftable_direct.has_value()) {
        note = name + " " + to_string(r.matrix) + ": quad criterion " +
               (r.cls.det_liftable ? "yes" : "no") + ", direct decider " +
               (r.cls.det_liftable_direct ? "yes" : "no");
        return false;
      }
  return true;
}

bool criterion_inclusion_lattice(std::string& note) {
  for (const std::string& name : kLatticeRings)
    for (const MatrixRecord& r : classified(name)) {
      const bool se = r.cls.simply_extendable.has_value();
      const bool e = r.cls.extendable.has_value();
      const bool dl = r.cls.det_liftable.has_value();
      const bool wdl = r.cls.weakly_det_liftable.has_value();
      if ((se && !dl) || (se && !e) || (e && !wdl) || (dl && !wdl)) {
        note = name + " " + to_string(r.matrix) + " breaks an inclusion";
        return false;
      }
    }
  return true;
}

bool criterion_companion_identities(std::string& note) {
  Ring z4 = make("Z/4");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          Mat2 m = m2i(z4, a, b, c, d);
          for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
              for (int zz = 0; zz < 4; ++zz)
                for (int w = 0; w < 4; ++w) {
                  std::array<Elem, 4> q{z4->from_int(x), z4->from_int(y),
                                        z4->from_int(zz), z4->from_int(w)};
                  if (!check_identities(m, q).all_pass()) {
                    note = "Z/4 " + to_string(m) + " quad [" +
                           std::to_string(x) + "," + std::to_string(y) + "," +
                           std::to_string(zz) + "," + std::to_string(w) + "]";
                    return false;
                  }
                }
        }
  Ring z = make("Z");
  std::mt19937_64 rng(0xACCE01ULL);
  std::uniform_int_distribution<long long> pick(-100, 100);
  for (int iter = 0; iter < 100000; ++iter) {
    Mat2 m = m2i(z, pick(rng), pick(rng), pick(rng), pick(rng));
    std::array<Elem, 4> q{z->from_int(pick(rng)), z->from_int(pick(rng)),
                          z->from_int(pick(rng)), z->from_int(pick(rng))};
    if (!check_identities(m, q).all_pass()) {
      note = "random integer sample #" + std::to_string(iter);
      return false;
    }
  }
  return true;
}

bool criterion_phi_root_split(std::string& note) {
  for (const char* name : {"Z/6", "GF(3)", "Z/2 x Z/3"}) {
    for (const MatrixRecord& r : classified(name))
      if (r.cls.weakly_det_liftable.has_value() !=
          r.cls.phi_root.has_value()) {
        note = std::string(name) + " " + to_string(r.matrix) +
               ": weak lift and phi root disagree on a reduced ring";
        return false;
      }
  }
  for (const char* name : {"Z/4", "GF(2)[x]/(x^2)"}) {
    Ring ring = make(name);
    for (const MatrixRecord& r : classified(name)) {
      if (r.cls.phi_root && !r.cls.weakly_det_liftable) {
        note = std::string(name) + " " + to_string(r.matrix) +
               ": phi root without weak lift";
        return false;
      }
      if (r.cls.weakly_det_liftable &&
          !phi_attains_nilpotent(ring, r.matrix)) {
        note = std::string(name) + " " + to_string(r.matrix) +
               ": weak lift but phi avoids the nilradical";
        return false;
      }
    }
  }
  return true;
}

bool criterion_hensel_ladder(std::string& note) {
  Ring z = make("Z");
  std::mt19937_64 rng(0xACCE05ULL);
  std::uniform_int_distribution<long long> pick(-50, 50);
  int accepted = 0;
  long long guard = 0;
  while (accepted < 1000 && ++guard < 400000) {
    Mat2 a = m2i(z, pick(rng), pick(rng), pick(rng), pick(rng));
    Int det = det2(a).z;
    if (det == 0 || det == 1 || det == -1) continue;
    if (!is_unimodular2(a)) continue;
    const Int t_int = factorize(det)[0].first;  // smallest prime factor
    const Elem t = z->from_int(t_int);
    ++accepted;

    Mat2 prev = a;
    Int modulus = 1;  // t^(2^(n-1)) for the chain check
    for (unsigned k = 1; k <= 4; ++k) {
      HenselLift lift = hensel_det_lift(a, t, k);
      const Int prec = boost::multiprecision::pow(
          t_int, static_cast<unsigned>(lift.precision_exponent));
      if (det2(lift.b).z % prec != 0) {
        note = to_string(a) + " t=" + t_int.str() + " k=" +
               std::to_string(k) + ": determinant precision violated";
        return false;
      }
      if (!congruent_mod(lift.b, a, t)) {
        note = to_string(a) + " t=" + t_int.str() + ": B != A mod t";
        return false;
      }
      modulus = (k == 1) ? t_int : modulus * modulus;  // t^(2^(k-1))
      if (!congruent_mod(lift.b, prev, z->from_int(modulus))) {
        note = to_string(a) + " t=" + t_int.str() + " k=" +
               std::to_string(k) + ": rung breaks the congruence chain";
        return false;
      }
      prev = lift.b;
    }
  }
  if (accepted < 1000) {
    note = "only " + std::to_string(accepted) + " usable samples generated";
    return false;
  }
  return true;
}

bool criterion_snf_witnesses(std::string& note) {
  Ring z = make("Z");
  std::mt19937_64 rng(0xACCE06ULL);
  std::uniform_int_distribution<long long> pick(-50, 50);
  int accepted = 0;
  long long guard = 0;
  while (accepted < 10000 && ++guard < 4000000) {
    Mat2 a = m2i(z, pick(rng), pick(rng), pick(rng), pick(rng));
    if (!is_unimodular2(a)) continue;
    ++accepted;

    MatMN m = mat_mn(a);
    SnfResult s = smith_normal_form(m);
    const Elem& d1 = s.d.rows[0][0];
    const Elem& d2 = s.d.rows[1][1];
    bool snf_ok =
        to_string(mat_mul(mat_mul(s.u, s.d), s.v)) == to_string(m) &&
        z->is_zero(s.d.rows[0][1]) && z->is_zero(s.d.rows[1][0]) &&
        d1.z >= 0 && d2.z >= 0 &&
        (z->is_zero(d1) ? z->is_zero(d2) : z->divides(d1, d2).has_value()) &&
        z->is_unit(det2(mat2(s.u.rows[0][0], s.u.rows[0][1], s.u.rows[1][0],
                             s.u.rows[1][1])))
            .has_value() &&
        z->is_unit(det2(mat2(s.v.rows[0][0], s.v.rows[0][1], s.v.rows[1][0],
                             s.v.rows[1][1])))
            .has_value() &&
        d1.z == 1;  // unimodular: the entry gcd is 1
    if (!snf_ok) {
      note = to_string(a) + ": diagonal reduction invariants violated";
      return false;
    }

    Witness se = simple_extension_witness(a);
    const auto& q = se.quad();
    Elem gauge = z->add(
        z->add(z->mul(z->mul(a.a, q[0]), q[3]), z->mul(z->mul(a.b, q[0]), q[2])),
        z->add(z->mul(z->mul(a.c, q[1]), q[3]),
               z->mul(z->mul(a.d, q[1]), q[2])));
    if (!z->is_one(gauge)) {
      note = to_string(a) + ": witness equation not equal to 1";
      return false;
    }

    DetLiftResult lift = det_lift_witness(a);
    if (!z->is_zero(det2(lift.b)) || !is_unimodular2(lift.b) ||
        !congruent_mod(lift.b, a, det2(a))) {
      note = to_string(a) + ": determinant-lift postconditions violated";
      return false;
    }
  }
  if (accepted < 10000) {
    note = "only " + std::to_string(accepted) + " unimodular samples";
    return false;
  }
  return true;
}

bool criterion_nonfull_refactor(std::string& note) {
  Ring z = make("Z");
  std::mt19937_64 rng(0xACCE07ULL);
  std::uniform_int_distribution<long long> pick(-40, 40);
  for (int iter = 0; iter < 10000; ++iter) {
    Mat2 m = [&] {
      if (iter % 100 == 0) return m2i(z, 0, 0, 0, 0);
      if (iter % 100 == 1) return m2i(z, 0, 0, pick(rng), pick(rng));
      const long long l = pick(rng), mm = pick(rng), o = pick(rng),
                      qq = pick(rng);
      return m2i(z, l * o, l * qq, mm * o, mm * qq);
    }();
    NonFullFactorization f = nonfull_factor(m);
    if (!(z->mul(f.col[0], f.row[0]) == m.a) ||
        !(z->mul(f.col[0], f.row[1]) == m.b) ||
        !(z->mul(f.col[1], f.row[0]) == m.c) ||
        !(z->mul(f.col[1], f.row[1]) == m.d)) {
      note = to_string(m) + ": outer product mismatch";
      return false;
    }
  }
  return true;
}

bool criterion_pair_solvability(std::string& note) {
  for (const char* name : {"Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "GF(2)", "GF(3)"}) {
    Wj21Report rep = wj21_check(make(name));
    if (!rep.holds) {
      std::ostringstream os;
      os << name << ": counterexample";
      if (rep.counterexample) {
        const auto& c = *rep.counterexample;
        const Ring& r = c.a.ring;
        os << " (a,b,c,d)=(" << r->to_string(c.a) << "," << r->to_string(c.b)
           << "," << r->to_string(c.c) << "," << r->to_string(c.d) << ")"
           << " psi=" << r->to_string(c.psi)
           << " delta=" << r->to_string(c.delta);
      }
      note = os.str();
      return false;
    }
  }
  return true;
}

bool criterion_census_flags(std::string& note) {
  for (const auto& row : umx_golden::kCensusRows) {
    CensusReport rep = run_census(make(row.ring));
    const std::uint64_t um = rep.unimodular_count;
    const bool counts_equal = rep.class_counts.simply_extendable == um &&
                              rep.class_counts.extendable == um &&
                              rep.class_counts.det_liftable == um &&
                              rep.class_counts.weakly_det_liftable == um &&
                              rep.class_counts.phi_root == um;
    if (!rep.ring_flags.is_pi2 || !rep.ring_flags.is_se2 || !counts_equal) {
      note = std::string(row.ring) + ": flags or counts degenerate";
      return false;
    }
    if (um != static_cast<std::uint64_t>(row.um) ||
        rep.total_matrices != static_cast<std::uint64_t>(row.total)) {
      note = std::string(row.ring) + ": counts differ from the frozen table";
      return false;
    }
    for (const Verdict& v : rep.verdicts)
      if (!v.pass) {
        note = std::string(row.ring) + ": verdict " + v.name + " failed";
        return false;
      }
  }
  return true;
}

bool cli_capture(const std::string& args, int& code, std::string& out) {
  std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  char buf[4096];
  std::size_t n;
  out.clear();
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return true;
}

bool criterion_cli_and_fuzz(std::string& note) {
  if (g_cli.empty()) {
    note = "no CLI binary path supplied";
    return false;
  }
  int code1 = -1, code2 = -1;
  std::string out1, out2;
  if (!cli_capture("census --ring 'Z/6'", code1, out1) ||
      !cli_capture("census --ring 'Z/6'", code2, out2)) {
    note = "could not launch the CLI";
    return false;
  }
  if (code1 != 0 || code2 != 0) {
    note = "census exited nonzero";
    return false;
  }
  if (out1 != out2 || out1.empty()) {
    note = "repeated census runs are not byte-identical";
    return false;
  }

  std::mt19937_64 rng(0xACCE10ULL);
  const std::string alphabet =
      "ZGFx/()[],+-*^0123456789 \t|Qq{}<>=_.;:!@#";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 64);
  Ring z6 = make("Z/6");
  Ring z = make("Z");
  for (int iter = 0; iter < 100000; ++iter) {
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
    try {
      parse_ring_spec(s);
    } catch (const UmxError&) {
    } catch (...) {
      note = "parse_ring_spec leaked a foreign exception on sample #" +
             std::to_string(iter);
      return false;
    }
    try {
      parse_element(s, iter % 2 ? z6 : z);
    } catch (const UmxError&) {
    } catch (...) {
      note = "parse_element leaked a foreign exception";
      return false;
    }
    try {
      parse_matrix2(s, z6);
    } catch (const UmxError&) {
    } catch (...) {
      note = "parse_matrix2 leaked a foreign exception";
      return false;
    }
    try {
      parse_quad(s, z6);
    } catch (const UmxError&) {
    } catch (...) {
      note = "parse_quad leaked a foreign exception";
      return false;
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* label;
  bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "the two determinant-lift deciders agree on all 11 benchmark rings",
     criterion_detlift_agreement},
    {2, "witness-class inclusions hold on all 11 benchmark rings",
     criterion_inclusion_lattice},
    {3, "companion identities: exhaustive Z/4 and 100000 integer samples",
     criterion_companion_identities},
    {4, "phi-root criteria split by reducedness on 5 rings",
     criterion_phi_root_split},
    {5, "hensel ladder congruence chain on 1000 integer matrices, k=4",
     criterion_hensel_ladder},
    {6, "diagonal reduction and witness synthesis on 10000 matrices",
     criterion_snf_witnesses},
    {7, "outer-product refactorization on 10000 zero-determinant matrices",
     criterion_nonfull_refactor},
    {8, "pair solvability holds exhaustively on 7 small rings",
     criterion_pair_solvability},
    {9, "census flags, counts and verdicts on 13 rings match the frozen table",
     criterion_census_flags},
    {10, "CLI byte-determinism and 100000-string parser fuzz",
     criterion_cli_and_fuzz},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.fn(note);
    } catch (const std::exception& e) {
      note = std::string("unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.label
         << " [exact; " << std::fixed << std::setprecision(1) << secs << "s]";
    if (!ok && !note.empty()) line << " — " << note;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " of 10 criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all 10 criteria passed" << std::endl;
  return 0;
}
