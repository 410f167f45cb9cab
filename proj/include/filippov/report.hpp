#pragma once

#include "filippov/exactlin.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

namespace filippov {

/// One violated instance of an identity: which identity, on which basis
/// index tuple, and the two sides that disagree.
struct Witness {
  std::string identity;
  std::vector<std::size_t> tuple;
  Vector lhs;
  Vector rhs;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t tuples_checked = 0;
  /// Total number of violations, including those beyond the witness cap.
  std::size_t violations = 0;
  /// Sorted by (tuple, identity); at most the configured cap.
  std::vector<Witness> witnesses;
};

struct CheckOptions {
  std::size_t witness_cap = 16;
  unsigned jobs = 1;
};

/// Folds `part` into `total` (used when one check is made of several sweeps).
void merge_into(CheckReport& total, const CheckReport& part, std::size_t witness_cap);

/// A report for a single named boolean fact.
CheckReport boolean_report(std::string name, bool holds, std::string identity = {});

namespace detail {

/// Collects witnesses for one contiguous slice of a sweep. Keeps every
/// violation of the tuple that reaches the cap so that the merged, sorted
/// result is the same however the sweep was partitioned.
class WitnessSink {
 public:
  explicit WitnessSink(std::size_t cap) : cap_(cap) {}

  void begin_tuple() { closed_ = kept_.size() >= cap_; }

  void add(std::string identity, const std::vector<std::size_t>& tuple, Vector lhs, Vector rhs) {
    ++violations_;
    if (!closed_) kept_.push_back(Witness{std::move(identity), tuple, std::move(lhs), std::move(rhs)});
  }

  /// Compares two sides and records a witness when they differ.
  bool expect_equal(const char* identity, const std::vector<std::size_t>& tuple, const Vector& lhs,
                    const Vector& rhs) {
    if (lhs == rhs) return true;
    add(identity, tuple, lhs, rhs);
    return false;
  }

  std::size_t violations() const { return violations_; }
  std::vector<Witness>& kept() { return kept_; }

 private:
  std::size_t cap_;
  bool closed_ = false;
  std::size_t violations_ = 0;
  std::vector<Witness> kept_;
};

void finalize(CheckReport& report, std::vector<Witness> witnesses, std::size_t cap);

/// Runs `visit(tuple, sink)` over every tuple, split into contiguous slices
/// across `options.jobs` threads. The report does not depend on `jobs`.
template <class Visit>
CheckReport sweep(std::string name, const std::vector<std::vector<std::size_t>>& tuples,
                  const CheckOptions& options, Visit visit) {
  CheckReport report;
  report.name = std::move(name);
  report.tuples_checked = tuples.size();
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, tuples.size()));
  std::vector<WitnessSink> sinks(jobs, WitnessSink(options.witness_cap));
  auto run_slice = [&](std::size_t slice) {
    std::size_t begin = tuples.size() * slice / jobs;
    std::size_t end = tuples.size() * (slice + 1) / jobs;
    for (std::size_t t = begin; t < end; ++t) {
      sinks[slice].begin_tuple();
      visit(tuples[t], sinks[slice]);
    }
  };
  if (jobs == 1) {
    run_slice(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t s = 0; s < jobs; ++s) workers.emplace_back(run_slice, s);
    for (auto& w : workers) w.join();
  }
  std::vector<Witness> all;
  for (auto& sink : sinks) {
    report.violations += sink.violations();
    std::move(sink.kept().begin(), sink.kept().end(), std::back_inserter(all));
  }
  finalize(report, std::move(all), options.witness_cap);
  return report;
}

/// All strictly increasing k-tuples from {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);
/// The full product {0..d0-1} x {0..d1-1} x ..., lexicographic.
std::vector<std::vector<std::size_t>> product(const std::vector<std::size_t>& dims);
/// Concatenations a ++ b for every a in first and b in second.
std::vector<std::vector<std::size_t>> concat_product(const std::vector<std::vector<std::size_t>>& first,
                                                     const std::vector<std::vector<std::size_t>>& second);

}  // namespace detail
}  // namespace filippov
