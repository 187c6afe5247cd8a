#include "zfree/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "zfree/engine.hpp"
#include "zfree/structure.hpp"

namespace zfree {

std::vector<Int> primes_in_range(Int lo, Int hi) {
  lo = std::max<Int>(lo, 2);
  std::vector<Int> out;
  if (hi < lo) return out;

  const Int root = isqrt(hi);
  std::vector<unsigned char> small(static_cast<std::size_t>(root) + 1, 1);
  std::vector<Int> base;
  for (Int i = 2; i <= root; ++i) {
    if (!small[static_cast<std::size_t>(i)]) continue;
    base.push_back(i);
    for (Int j = i * i; j <= root; j += i) small[static_cast<std::size_t>(j)] = 0;
  }

  constexpr Int kSegment = 1 << 18;
  std::vector<unsigned char> seg;
  for (Int start = lo; start <= hi; start += kSegment) {
    const Int stop = std::min(hi, start + kSegment - 1);
    seg.assign(static_cast<std::size_t>(stop - start + 1), 1);
    for (Int q : base) {
      if (q * q > stop) break;
      Int first = std::max(q * q, (start + q - 1) / q * q);
      for (Int j = first; j <= stop; j += q) seg[static_cast<std::size_t>(j - start)] = 0;
    }
    for (Int v = start; v <= stop; ++v) {
      if (seg[static_cast<std::size_t>(v - start)]) out.push_back(v);
    }
  }
  return out;
}

std::size_t SweepReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const SweepRecord& r) {
    return !r.error.empty() || r.extremal_verified == false || r.interval_verified == false;
  }));
}

namespace {

std::optional<int> classify_row_of(const ResidueSet& a) {
  if (static_cast<Int>(a.size()) != max_zero_free_card_formula(a.modulus())) return std::nullopt;
  const Classification c = classify_structure(a);
  return c.row_id;
}

void run_checks(SweepRecord& rec, const SweepOptions& options) {
  const PrimeModulus p(rec.p);
  rec.k_formula = max_zero_free_card_formula(p);
  rec.delta = delta(p);
  rec.s_triangular = triangular_s(p);
  rec.special = is_special_prime(p);

  if (rec.p <= options.verify_cutoff) {
    const ResidueSet extremal = construct_extremal(p);
    rec.extremal_verified = static_cast<Int>(extremal.size()) == rec.k_formula && is_zero_free(extremal);
    rec.interval_verified = is_zero_free(construct_interval_set(p));
  }

  std::optional<ResidueSet> classify_target;
  if (rec.p <= options.oracle_cutoff) {
    const OracleResult oracle = oracle_max_zero_free(p, options.oracle_node_budget);
    if (oracle.status == OracleStatus::complete) {
      rec.oracle_card = oracle.max_card;
      rec.oracle_agrees = oracle.agrees;
      classify_target = dilate_set(oracle.witness, find_normalizing_dilate(oracle.witness).d);
    }
  } else {
    classify_target = construct_extremal(p);
  }
  if (classify_target) rec.classify_row = classify_row_of(*classify_target);
}

void summarize(SweepReport& report) {
  const auto n = report.records.size();
  std::size_t delta_zero = 0;
  for (const SweepRecord& r : report.records) {
    if (r.delta == 0) ++delta_zero;
    if (r.special) ++report.special_count;
  }
  report.delta_zero_fraction = n == 0 ? 0.0 : static_cast<double>(delta_zero) / static_cast<double>(n);
  report.special_count_over_sqrt =
      report.hi > 0 ? static_cast<double>(report.special_count) / std::sqrt(static_cast<double>(report.hi)) : 0.0;
}

SweepReport prepare(const SweepOptions& options, std::vector<Int>& primes) {
  if (options.lo < 7) throw std::invalid_argument("sweep needs lo >= 7");
  if (options.workers < 1) throw std::invalid_argument("sweep needs at least one worker");
  primes = primes_in_range(options.lo, options.hi);
  SweepReport report;
  report.lo = options.lo;
  report.hi = options.hi;
  report.records.resize(primes.size());
  return report;
}

}  // namespace

SweepRecord evaluate_prime(Int p, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.p = p;
  try {
    run_checks(rec, options);
  } catch (const std::exception& e) {
    rec.error = e.what();
    if (!rec.extremal_verified) rec.extremal_verified = false;
  } catch (...) {
    rec.error = "unknown failure";
    if (!rec.extremal_verified) rec.extremal_verified = false;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SweepReport sweep(const SweepOptions& options) {
  std::vector<Int> primes;
  SweepReport report = prepare(options, primes);
  const auto count = static_cast<std::int64_t>(primes.size());
  // Records are written by index, so the merge order is fixed by p.
#pragma omp parallel for schedule(dynamic, 8) num_threads(options.workers)
  for (std::int64_t i = 0; i < count; ++i) {
    report.records[static_cast<std::size_t>(i)] = evaluate_prime(primes[static_cast<std::size_t>(i)], options);
  }
  summarize(report);
  return report;
}

SweepReport sweep_serial(const SweepOptions& options) {
  std::vector<Int> primes;
  SweepReport report = prepare(options, primes);
  for (std::size_t i = 0; i < primes.size(); ++i) report.records[i] = evaluate_prime(primes[i], options);
  summarize(report);
  return report;
}

}  // namespace zfree
