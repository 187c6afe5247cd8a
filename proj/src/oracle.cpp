#include "zfree/oracle.hpp"

#include <vector>

#include "zfree/bitset.hpp"
#include "zfree/structure.hpp"

namespace zfree {
namespace {

// Depth-first search over sets {1 = a_0 < a_1 < ...}. Every nonempty
// zero-free set has a dilate containing 1 (scale by the inverse of any
// member), so fixing 1 loses no cardinality.
class MaxZeroFreeSearch {
 public:
  MaxZeroFreeSearch(PrimeModulus p, std::uint64_t budget)
      : p_(p), n_(static_cast<std::size_t>(p.value())), budget_(budget) {
    levels_.assign(n_ / 2 + 2, BitArray(n_));
  }

  void run() {
    BitArray& root = levels_[0];
    root.set(1);
    chosen_.push_back(1);
    record();
    descend(0, 1);
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<Int>& best() const noexcept { return best_; }

 private:
  void record() {
    if (chosen_.size() > best_.size()) best_ = chosen_;
  }

  // Candidates above `last`: c with -c not yet a subset sum. Adding any other
  // c would make 0 reachable, and since sums only grow they stay excluded.
  // A pair {c, -c} of candidates contributes at most one element.
  std::size_t remaining_bound(const BitArray& sums, std::size_t last) const {
    std::size_t bound = 0;
    for (std::size_t c = last + 1; c < n_; ++c) {
      if (sums.test(n_ - c)) continue;
      const std::size_t mirror = n_ - c;
      if (mirror > last && !sums.test(c)) {
        if (c < mirror) ++bound;
      } else {
        ++bound;
      }
    }
    return bound;
  }

  void descend(std::size_t depth, std::size_t last) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const BitArray& sums = levels_[depth];
    if (chosen_.size() + remaining_bound(sums, last) <= best_.size()) return;

    BitArray& next = levels_[depth + 1];
    for (std::size_t c = last + 1; c < n_ && !exhausted_; ++c) {
      if (sums.test(n_ - c)) continue;
      next = sums;
      next.or_rotated(sums, c);
      next.set(c);
      chosen_.push_back(static_cast<Int>(c));
      record();
      descend(depth + 1, c);
      chosen_.pop_back();
    }
  }

  PrimeModulus p_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<BitArray> levels_;
  std::vector<Int> chosen_;
  std::vector<Int> best_;
};

}  // namespace

OracleResult oracle_max_zero_free(PrimeModulus p, std::uint64_t node_budget) {
  MaxZeroFreeSearch search(p, node_budget);
  search.run();
  const Int formula = max_zero_free_card_formula(p);
  const auto card = static_cast<Int>(search.best().size());
  const OracleStatus status = search.exhausted() ? OracleStatus::inconclusive : OracleStatus::complete;
  return {p,
          status,
          card,
          ResidueSet(p, search.best()),
          search.nodes(),
          formula,
          status == OracleStatus::complete && card == formula};
}

}  // namespace zfree
