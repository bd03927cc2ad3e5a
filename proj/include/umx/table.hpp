#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "umx/ring.hpp"

namespace umx {

// Dense index-space arithmetic for a finite ring — the workhorse behind the
// exhaustive deciders. Element i is ring->elem_at(i); all tables follow the
// ring's enumeration order, so "first hit" at index level equals "first hit"
// at element level.
class FiniteRingTable {
 public:
  // builds add/mul/neg tables plus unit/nilpotent/zero-divisor flags;
  // BudgetExceeded when the cardinality exceeds the dense-table limit
  explicit FiniteRingTable(const Ring& ring);

  static constexpr std::uint64_t kMaxCardinality = 4096;

  const Ring& ring() const { return ring_; }
  std::uint32_t n() const { return n_; }
  std::uint16_t zero() const { return zero_; }
  std::uint16_t one() const { return one_; }

  std::uint16_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[a * n_ + b];
  }
  std::uint16_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * n_ + b];
  }
  std::uint16_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint16_t sub(std::uint32_t a, std::uint32_t b) const {
    return add_[a * n_ + neg_[b]];
  }

  bool is_unit(std::uint32_t a) const { return unit_[a]; }
  bool is_nilpotent(std::uint32_t a) const { return nilp_[a]; }
  bool is_zero_divisor(std::uint32_t a) const { return zdiv_[a]; }

  // first q in enumeration order with a*q = b, or kNoDiv
  static constexpr std::uint16_t kNoDiv = 0xFFFF;
  std::uint16_t first_div(std::uint32_t a, std::uint32_t b) const {
    return div_[a * n_ + b];
  }

  // 1 in the ideal generated by the four elements (memoized closure search)
  bool unimodular4(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                   std::uint32_t d) const;

  Elem elem(std::uint32_t i) const { return ring_->elem_at(i); }

 private:
  bool unimodular4_compute(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                           std::uint32_t d) const;

  Ring ring_;
  std::uint32_t n_ = 0;
  std::uint16_t zero_ = 0, one_ = 0;
  std::vector<std::uint16_t> add_, mul_, neg_, div_;
  std::vector<bool> unit_, nilp_, zdiv_;
  std::vector<std::uint8_t> um4_memo_;  // 1 no, 2 yes; empty when too large
};

// shared per-ring cache (keyed by the canonical ring name); the returned
// reference stays valid for the process lifetime
const FiniteRingTable& table_for(const Ring& ring);

}  // namespace umx
