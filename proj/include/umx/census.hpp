#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "umx/decide.hpp"
#include "umx/mat.hpp"

namespace umx {

struct ClassCounts {
  std::uint64_t simply_extendable = 0;
  std::uint64_t extendable = 0;
  std::uint64_t det_liftable = 0;
  std::uint64_t weakly_det_liftable = 0;
  std::uint64_t phi_root = 0;
};

struct RingFlags {
  bool is_pi2 = false;      // every zero-det unimodular matrix extendable
  bool is_se2 = false;      // every unimodular matrix simply extendable
  bool wj21_holds = false;  // pair-solvability condition
};

// one machine-checked statement; inapplicable verdicts (hypothesis failed
// for this ring) pass vacuously and say so via `applicable`
struct Verdict {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::optional<Mat2> counterexample;
};

struct MatrixRecord {
  Mat2 matrix;
  Classification cls;
};

struct CensusReport {
  std::string ring;
  std::uint64_t total_matrices = 0;
  std::uint64_t unimodular_count = 0;
  ClassCounts class_counts;
  RingFlags ring_flags;
  std::vector<Verdict> verdicts;
  double elapsed_seconds = 0.0;
};

struct CensusOptions {
  std::uint64_t max_cardinality = 12;  // BudgetExceeded above this
  unsigned threads = 0;                // 0 = hardware concurrency
};

// all unimodular 2x2 matrices, ordered by entry indices with a most
// significant and d fastest
std::vector<Mat2> enumerate_um2(const Ring& ring);

// classifies every unimodular matrix (concurrently, merged back into
// enumeration order) and machine-checks the theorem list
CensusReport run_census(const Ring& ring, const CensusOptions& opts = {});

// the verdict list on finished classifications; exposed separately so the
// checks can run against externally assembled records
std::vector<Verdict> verify_theorems(const Ring& ring,
                                     const std::vector<MatrixRecord>& records,
                                     const RingFlags& flags);

// deterministic serialization: sorted keys, counts as integers, matrices
// as nested arrays of canonical element strings; elapsed only on request
nlohmann::json census_to_json(const CensusReport& report,
                              bool include_elapsed = false);
std::string census_to_csv(const CensusReport& report);

}  // namespace umx
