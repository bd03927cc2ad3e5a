#include "umx/table.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace umx {

FiniteRingTable::FiniteRingTable(const Ring& ring) : ring_(ring) {
  std::uint64_t n = ring->card_u64();
  if (n > kMaxCardinality)
    fail(Err::BudgetExceeded, "cardinality " + std::to_string(n) +
                                  " exceeds the exhaustive-search limit " +
                                  std::to_string(kMaxCardinality));
  n_ = static_cast<std::uint32_t>(n);

  std::vector<Elem> elems = enumerate_all(ring);
  zero_ = static_cast<std::uint16_t>(ring->index_of(ring->zero()));
  one_ = static_cast<std::uint16_t>(ring->index_of(ring->one()));

  add_.resize(std::size_t(n_) * n_);
  mul_.resize(std::size_t(n_) * n_);
  neg_.resize(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    neg_[i] = static_cast<std::uint16_t>(ring->index_of(ring->neg(elems[i])));
    for (std::uint32_t j = 0; j < n_; ++j) {
      add_[std::size_t(i) * n_ + j] =
          static_cast<std::uint16_t>(ring->index_of(ring->add(elems[i], elems[j])));
      mul_[std::size_t(i) * n_ + j] =
          static_cast<std::uint16_t>(ring->index_of(ring->mul(elems[i], elems[j])));
    }
  }

  // first_div[a][b] = least q with a*q = b
  div_.assign(std::size_t(n_) * n_, kNoDiv);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t q = 0; q < n_; ++q) {
      std::uint16_t& slot = div_[std::size_t(a) * n_ + mul(a, q)];
      if (slot == kNoDiv) slot = static_cast<std::uint16_t>(q);
    }
  }

  unit_.resize(n_);
  nilp_.resize(n_);
  zdiv_.resize(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    unit_[i] = div_[std::size_t(i) * n_ + one_] != kNoDiv;
    bool zd = false;
    for (std::uint32_t j = 0; j < n_ && !zd; ++j) {
      if (j != zero_ && mul(i, j) == zero_) zd = true;
    }
    zdiv_[i] = zd;
    std::uint32_t v = i;
    for (std::uint32_t k = 0; k < n_ && v != zero_; ++k) v = mul(v, i);
    nilp_[i] = v == zero_;
  }

  // precompute the quadruple unimodularity predicate when the key space is
  // small; built eagerly so concurrent readers never mutate shared state
  std::uint64_t quads = std::uint64_t(n_) * n_ * n_ * n_;
  if (n_ <= 16) {
    um4_memo_.assign(quads, 0);
    std::uint64_t key = 0;
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        for (std::uint32_t c = 0; c < n_; ++c)
          for (std::uint32_t d = 0; d < n_; ++d, ++key)
            um4_memo_[key] = unimodular4_compute(a, b, c, d) ? 2 : 1;
  }
}

bool FiniteRingTable::unimodular4_compute(std::uint32_t a, std::uint32_t b,
                                          std::uint32_t c,
                                          std::uint32_t d) const {
  // BFS over the additive closure of all multiples of the four generators
  std::vector<std::uint8_t> seen(n_, 0);
  std::vector<std::uint16_t> mults;
  mults.reserve(4 * n_);
  for (std::uint32_t g : {a, b, c, d}) {
    for (std::uint32_t r = 0; r < n_; ++r) mults.push_back(mul(r, g));
  }
  std::sort(mults.begin(), mults.end());
  mults.erase(std::unique(mults.begin(), mults.end()), mults.end());
  std::vector<std::uint16_t> frontier{zero_};
  seen[zero_] = 1;
  while (!frontier.empty()) {
    std::uint16_t s = frontier.back();
    frontier.pop_back();
    for (std::uint16_t m : mults) {
      std::uint16_t t = add(s, m);
      if (!seen[t]) {
        if (t == one_) return true;
        seen[t] = 1;
        frontier.push_back(t);
      }
    }
  }
  return seen[one_];
}

bool FiniteRingTable::unimodular4(std::uint32_t a, std::uint32_t b,
                                  std::uint32_t c, std::uint32_t d) const {
  if (um4_memo_.empty()) return unimodular4_compute(a, b, c, d);
  std::uint64_t key = ((std::uint64_t(a) * n_ + b) * n_ + c) * n_ + d;
  return um4_memo_[key] == 2;
}

const FiniteRingTable& table_for(const Ring& ring) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<FiniteRingTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ring->name());
  if (it == cache.end()) {
    it = cache.emplace(ring->name(), std::make_unique<FiniteRingTable>(ring))
             .first;
  }
  return *it->second;
}

}  // namespace umx
