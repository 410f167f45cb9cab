#include "filippov/report.hpp"

namespace filippov {

namespace detail {

void finalize(CheckReport& report, std::vector<Witness> witnesses, std::size_t cap) {
  std::stable_sort(witnesses.begin(), witnesses.end(), [](const Witness& a, const Witness& b) {
    if (a.tuple != b.tuple) return a.tuple < b.tuple;
    return a.identity < b.identity;
  });
  if (witnesses.size() > cap) witnesses.resize(cap);
  report.witnesses = std::move(witnesses);
  report.passed = report.violations == 0;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<std::size_t>> product(const std::vector<std::size_t>& dims) {
  std::vector<std::vector<std::size_t>> out;
  for (auto d : dims)
    if (d == 0) return out;
  std::vector<std::size_t> current(dims.size(), 0);
  while (true) {
    out.push_back(current);
    std::size_t i = dims.size();
    while (i > 0) {
      --i;
      if (++current[i] < dims[i]) break;
      current[i] = 0;
      if (i == 0) return out;
    }
    if (dims.empty()) return out;
  }
}

std::vector<std::vector<std::size_t>> concat_product(const std::vector<std::vector<std::size_t>>& first,
                                                     const std::vector<std::vector<std::size_t>>& second) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(first.size() * second.size());
  for (const auto& a : first) {
    for (const auto& b : second) {
      auto t = a;
      t.insert(t.end(), b.begin(), b.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace detail

void merge_into(CheckReport& total, const CheckReport& part, std::size_t witness_cap) {
  total.tuples_checked += part.tuples_checked;
  total.violations += part.violations;
  auto witnesses = std::move(total.witnesses);
  witnesses.insert(witnesses.end(), part.witnesses.begin(), part.witnesses.end());
  detail::finalize(total, std::move(witnesses), witness_cap);
}

CheckReport boolean_report(std::string name, bool holds, std::string identity) {
  CheckReport r;
  r.tuples_checked = 1;
  if (!holds) {
    r.violations = 1;
    r.witnesses.push_back(Witness{identity.empty() ? name : std::move(identity), {}, {}, {}});
  }
  r.name = std::move(name);
  r.passed = holds;
  return r;
}

}  // namespace filippov
