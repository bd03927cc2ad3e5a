#include "umx/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "umx/table.hpp"

namespace umx {

std::vector<Mat2> enumerate_um2(const Ring& ring) {
  if (!ring->finite())
    fail(Err::InfiniteRing,
         "matrix enumeration needs a finite ring, got " + ring->name());
  const FiniteRingTable& t = table_for(ring);
  const std::uint32_t n = t.n();
  std::vector<Mat2> out;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d)
          if (t.unimodular4(a, b, c, d))
            out.push_back(mat2(t.elem(a), t.elem(b), t.elem(c), t.elem(d)));
  return out;
}

namespace {

// does [[a,b],[c,d]] factor as col (l,m) times row (o,q)?
bool has_outer_factorization(const FiniteRingTable& t, std::uint32_t a,
                             std::uint32_t b, std::uint32_t c,
                             std::uint32_t d) {
  const std::uint32_t n = t.n();
  for (std::uint32_t l = 0; l < n; ++l)
    for (std::uint32_t m = 0; m < n; ++m)
      for (std::uint32_t o = 0; o < n; ++o) {
        if (t.mul(l, o) != a || t.mul(m, o) != c) continue;
        for (std::uint32_t q = 0; q < n; ++q)
          if (t.mul(l, q) == b && t.mul(m, q) == d) return true;
      }
  return false;
}

bool all_zero_det_nonfull(const FiniteRingTable& t) {
  const std::uint32_t n = t.n();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          if (t.sub(t.mul(a, d), t.mul(b, c)) != t.zero()) continue;
          if (!has_outer_factorization(t, a, b, c, d)) return false;
        }
  return true;
}

// every unimodular triple (a,b,c) reduces: some (a+xc, b+yc) is unimodular
bool stable_range_le_2(const FiniteRingTable& t) {
  const std::uint32_t n = t.n();
  const std::uint16_t zero = t.zero();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        if (!t.unimodular4(a, b, c, zero)) continue;
        bool reducible = false;
        for (std::uint32_t x = 0; x < n && !reducible; ++x) {
          const std::uint32_t u = t.add(a, t.mul(x, c));
          for (std::uint32_t y = 0; y < n; ++y)
            if (t.unimodular4(u, t.add(b, t.mul(y, c)), zero, zero)) {
              reducible = true;
              break;
            }
        }
        if (!reducible) return false;
      }
  return true;
}

// does Phi_A take a nilpotent value anywhere on R^4?
bool phi_attains_nilpotent(const FiniteRingTable& t, const Mat2& m) {
  const Ring& ring = m.ring();
  const std::uint32_t n = t.n();
  const auto a = static_cast<std::uint32_t>(ring->index_of(m.a));
  const auto b = static_cast<std::uint32_t>(ring->index_of(m.b));
  const auto c = static_cast<std::uint32_t>(ring->index_of(m.c));
  const auto d = static_cast<std::uint32_t>(ring->index_of(m.d));
  const std::uint32_t det = t.sub(t.mul(a, d), t.mul(b, c));
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t s1 = t.sub(t.one(), t.mul(a, x));
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t s2 = t.sub(s1, t.mul(b, y));
      for (std::uint32_t z = 0; z < n; ++z) {
        const std::uint32_t s3 = t.sub(s2, t.mul(c, z));
        const std::uint32_t yz = t.mul(y, z);
        for (std::uint32_t w = 0; w < n; ++w) {
          const std::uint32_t phi =
              t.add(t.sub(s3, t.mul(d, w)), t.mul(det, t.sub(t.mul(x, w), yz)));
          if (t.is_nilpotent(phi)) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::vector<Verdict> verify_theorems(const Ring& ring,
                                     const std::vector<MatrixRecord>& records,
                                     const RingFlags& flags) {
  const FiniteRingTable& t = table_for(ring);
  std::vector<Verdict> out;

  auto check_all = [&](std::string name, auto&& pred) {
    Verdict v;
    v.name = std::move(name);
    v.applicable = true;
    v.pass = true;
    for (const MatrixRecord& r : records)
      if (!pred(r)) {
        v.pass = false;
        v.counterexample = r.matrix;
        break;
      }
    out.push_back(std::move(v));
  };
  auto vacuous = [&](std::string name) {
    Verdict v;
    v.name = std::move(name);
    v.applicable = false;
    v.pass = true;
    out.push_back(std::move(v));
  };

  check_all("detlift-definition-matches-quad-criterion",
            [](const MatrixRecord& r) {
              return r.cls.det_liftable.has_value() ==
                     r.cls.det_liftable_direct.has_value();
            });
  check_all("simply-extendable-implies-detlift", [](const MatrixRecord& r) {
    return !r.cls.simply_extendable || r.cls.det_liftable;
  });
  check_all("extendable-implies-weak-detlift", [](const MatrixRecord& r) {
    return !r.cls.extendable || r.cls.weakly_det_liftable;
  });
  check_all("class-inclusions", [](const MatrixRecord& r) {
    const bool se = r.cls.simply_extendable.has_value();
    const bool e = r.cls.extendable.has_value();
    const bool dl = r.cls.det_liftable.has_value();
    const bool wdl = r.cls.weakly_det_liftable.has_value();
    return (!se || e) && (!se || dl) && (!e || wdl) && (!dl || wdl);
  });

  // hypothesis: every zero-determinant unimodular matrix simply extendable
  bool zero_det_simple = true;
  for (const MatrixRecord& r : records)
    if (ring->is_zero(r.cls.det) && !r.cls.simply_extendable) {
      zero_det_simple = false;
      break;
    }
  if (zero_det_simple)
    check_all("pi2-iff-simple-equals-detlift", [](const MatrixRecord& r) {
      return r.cls.simply_extendable.has_value() ==
             r.cls.det_liftable.has_value();
    });
  else
    vacuous("pi2-iff-simple-equals-detlift");

  // hypothesis: every zero-determinant matrix over the ring is non-full
  const bool zero_det_nonfull = all_zero_det_nonfull(t);
  if (zero_det_nonfull)
    check_all("zerodet-nonfull-implies-extendable-iff-weak",
              [](const MatrixRecord& r) {
                return r.cls.extendable.has_value() ==
                       r.cls.weakly_det_liftable.has_value();
              });
  else
    vacuous("zerodet-nonfull-implies-extendable-iff-weak");

  check_all("phi-root-implies-weak-detlift", [](const MatrixRecord& r) {
    return !r.cls.phi_root || r.cls.weakly_det_liftable;
  });

  if (ring->caps().is_reduced)
    check_all("reduced-weak-detlift-iff-phi-root", [](const MatrixRecord& r) {
      return r.cls.weakly_det_liftable.has_value() ==
             r.cls.phi_root.has_value();
    });
  else
    vacuous("reduced-weak-detlift-iff-phi-root");

  if (!ring->caps().is_reduced)
    check_all("nonreduced-weak-detlift-gives-nilpotent-phi-value",
              [&](const MatrixRecord& r) {
                if (!r.cls.weakly_det_liftable) return true;
                if (r.cls.phi_root) return true;  // zero is nilpotent
                return phi_attains_nilpotent(t, r.matrix);
              });
  else
    vacuous("nonreduced-weak-detlift-gives-nilpotent-phi-value");

  if (flags.wj21_holds)
    check_all("pair-solvability-implies-all-detlift", [](const MatrixRecord& r) {
      return r.cls.det_liftable.has_value();
    });
  else
    vacuous("pair-solvability-implies-all-detlift");

  const bool sr2 = stable_range_le_2(t);

  if (flags.is_pi2 && sr2)
    check_all("pi2-stablerange2-collapses-se-e-detlift",
              [](const MatrixRecord& r) {
                const bool se = r.cls.simply_extendable.has_value();
                const bool e = r.cls.extendable.has_value();
                const bool dl = r.cls.det_liftable.has_value();
                return se == e && e == dl;
              });
  else
    vacuous("pi2-stablerange2-collapses-se-e-detlift");

  // ring-level iff: SE2 <=> Pi2 and every nonzero-determinant matrix det-lifts
  {
    Verdict v;
    v.name = "se2-iff-pi2-and-nonzerodet-detlift";
    v.applicable = true;
    const MatrixRecord* nonzero_det_not_dl = nullptr;
    for (const MatrixRecord& r : records)
      if (!ring->is_zero(r.cls.det) && !r.cls.det_liftable) {
        nonzero_det_not_dl = &r;
        break;
      }
    v.pass = flags.is_se2 == (flags.is_pi2 && nonzero_det_not_dl == nullptr);
    if (!v.pass) {
      if (flags.is_se2 && nonzero_det_not_dl) {
        v.counterexample = nonzero_det_not_dl->matrix;
      } else if (!flags.is_se2) {
        for (const MatrixRecord& r : records)
          if (!r.cls.simply_extendable) {
            v.counterexample = r.matrix;
            break;
          }
      }
    }
    out.push_back(std::move(v));
  }

  if (sr2 && zero_det_nonfull)
    check_all("stablerange2-zerodet-nonfull-collapses-all-classes",
              [](const MatrixRecord& r) {
                const bool se = r.cls.simply_extendable.has_value();
                const bool e = r.cls.extendable.has_value();
                const bool dl = r.cls.det_liftable.has_value();
                const bool wdl = r.cls.weakly_det_liftable.has_value();
                return se == e && e == dl && dl == wdl;
              });
  else
    vacuous("stablerange2-zerodet-nonfull-collapses-all-classes");

  return out;
}

CensusReport run_census(const Ring& ring, const CensusOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  if (!ring->finite())
    fail(Err::InfiniteRing, "census needs a finite ring, got " + ring->name());
  const std::uint64_t card = ring->card_u64();
  if (card > opts.max_cardinality)
    fail(Err::BudgetExceeded,
         "ring cardinality " + std::to_string(card) +
             " exceeds the census budget " +
             std::to_string(opts.max_cardinality));
  table_for(ring);  // built before any worker threads exist

  std::vector<Mat2> ums = enumerate_um2(ring);
  CensusReport rep;
  rep.ring = ring->name();
  rep.total_matrices = card * card * card * card;
  rep.unimodular_count = ums.size();

  // classify concurrently; records land at their enumeration position, so
  // the merged result is independent of scheduling
  std::vector<MatrixRecord> records(ums.size());
  unsigned nthreads = opts.threads ? opts.threads
                                   : std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  nthreads = static_cast<unsigned>(
      std::min<std::size_t>(nthreads, std::max<std::size_t>(ums.size(), 1)));
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&]() {
    try {
      constexpr std::size_t kChunk = 64;
      while (true) {
        const std::size_t lo = cursor.fetch_add(kChunk);
        if (lo >= ums.size()) return;
        const std::size_t hi = std::min(ums.size(), lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i)
          records[i] = MatrixRecord{ums[i], classify(ums[i])};
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const MatrixRecord& r : records) {
    if (r.cls.simply_extendable) ++rep.class_counts.simply_extendable;
    if (r.cls.extendable) ++rep.class_counts.extendable;
    if (r.cls.det_liftable) ++rep.class_counts.det_liftable;
    if (r.cls.weakly_det_liftable) ++rep.class_counts.weakly_det_liftable;
    if (r.cls.phi_root) ++rep.class_counts.phi_root;
  }
  rep.ring_flags.is_se2 = rep.class_counts.simply_extendable == records.size();
  rep.ring_flags.is_pi2 = true;
  for (const MatrixRecord& r : records)
    if (ring->is_zero(r.cls.det) && !r.cls.extendable) {
      rep.ring_flags.is_pi2 = false;
      break;
    }
  rep.ring_flags.wj21_holds = wj21_check(ring).holds;

  rep.verdicts = verify_theorems(ring, records, rep.ring_flags);

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return rep;
}

namespace {

nlohmann::json mat_to_json(const Mat2& m) {
  const Ring& ring = m.ring();
  return nlohmann::json::array(
      {nlohmann::json::array({ring->to_string(m.a), ring->to_string(m.b)}),
       nlohmann::json::array({ring->to_string(m.c), ring->to_string(m.d)})});
}

}  // namespace

nlohmann::json census_to_json(const CensusReport& rep, bool include_elapsed) {
  nlohmann::json j;
  j["ring"] = rep.ring;
  j["total_matrices"] = rep.total_matrices;
  j["unimodular_count"] = rep.unimodular_count;
  j["class_counts"] = {
      {"simply_extendable", rep.class_counts.simply_extendable},
      {"extendable", rep.class_counts.extendable},
      {"det_liftable", rep.class_counts.det_liftable},
      {"weakly_det_liftable", rep.class_counts.weakly_det_liftable},
      {"phi_root", rep.class_counts.phi_root}};
  j["ring_flags"] = {{"is_pi2", rep.ring_flags.is_pi2},
                     {"is_se2", rep.ring_flags.is_se2},
                     {"wj21_holds", rep.ring_flags.wj21_holds}};
  nlohmann::json verdicts = nlohmann::json::array();
  for (const Verdict& v : rep.verdicts) {
    nlohmann::json jv;
    jv["name"] = v.name;
    jv["applicable"] = v.applicable;
    jv["pass"] = v.pass;
    if (v.counterexample) jv["counterexample"] = mat_to_json(*v.counterexample);
    verdicts.push_back(std::move(jv));
  }
  j["verdicts"] = std::move(verdicts);
  if (include_elapsed) j["elapsed_seconds"] = rep.elapsed_seconds;
  return j;
}

std::string census_to_csv(const CensusReport& rep) {
  std::string s = "metric,value\n";
  auto row = [&](const char* k, const std::string& v) {
    s += k;
    s += ",";
    s += v;
    s += "\n";
  };
  auto num = [](std::uint64_t v) { return std::to_string(v); };
  auto yn = [](bool b) { return std::string(b ? "true" : "false"); };
  row("ring", rep.ring);
  row("total_matrices", num(rep.total_matrices));
  row("unimodular_count", num(rep.unimodular_count));
  row("simply_extendable", num(rep.class_counts.simply_extendable));
  row("extendable", num(rep.class_counts.extendable));
  row("det_liftable", num(rep.class_counts.det_liftable));
  row("weakly_det_liftable", num(rep.class_counts.weakly_det_liftable));
  row("phi_root", num(rep.class_counts.phi_root));
  row("is_pi2", yn(rep.ring_flags.is_pi2));
  row("is_se2", yn(rep.ring_flags.is_se2));
  row("wj21_holds", yn(rep.ring_flags.wj21_holds));
  std::uint64_t passed = 0;
  for (const Verdict& v : rep.verdicts) passed += v.pass ? 1 : 0;
  row("verdicts_passed", num(passed));
  row("verdicts_total", num(rep.verdicts.size()));
  return s;
}

}  // namespace umx
