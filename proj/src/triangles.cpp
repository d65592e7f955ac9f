#include "dowling/triangles.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dowling {

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<Integer>> stirling_rows = {{Integer(1)}};

// One triangle per exact (m, a) key; identity sweeps revisit the same
// parameters heavily, so rows are retained for the process lifetime.
std::mutex ncw_mutex;
std::map<std::pair<Rational, Rational>, std::vector<std::vector<Rational>>>
    ncw_tables;

}  // namespace

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  std::lock_guard lock(stirling_mutex);
  while (stirling_rows.size() <= n) {
    const auto& prev = stirling_rows.back();
    const unsigned r = static_cast<unsigned>(stirling_rows.size());
    std::vector<Integer> row(r + 1);
    row[0] = 0;
    row[r] = 1;
    for (unsigned j = 1; j < r; ++j)
      row[j] = prev[j - 1] + Integer(j) * prev[j];
    stirling_rows.push_back(std::move(row));
  }
  return stirling_rows[n][k];
}

Rational translated_whitney(const Rational& m, unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  return int_pow(m, static_cast<long long>(n) - k) * Rational(stirling2(n, k));
}

Rational translated_whitney_explicit(const Rational& m, unsigned n,
                                     unsigned k) {
  if (m == 0)
    throw std::domain_error("translated_whitney_explicit: m must be nonzero");
  Rational sum(0);
  for (unsigned j = 0; j <= k; ++j) {
    const Rational term = Rational(binomial(k, j)) * int_pow(m * j, n);
    sum += (k - j) % 2 == 0 ? term : -term;
  }
  return sum / (int_pow(m, k) * Rational(factorial(k)));
}

Rational noncentral_whitney(const Rational& m, const Rational& a, unsigned n,
                            unsigned k) {
  if (m == 0) throw std::domain_error("noncentral_whitney: m must be nonzero");
  if (k > n) return Rational(0);
  std::lock_guard lock(ncw_mutex);
  auto& rows = ncw_tables[{m, a}];
  if (rows.empty()) rows.push_back({Rational(1)});
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    const unsigned r = static_cast<unsigned>(rows.size());
    std::vector<Rational> row(r + 1);
    for (unsigned j = 0; j <= r; ++j) {
      Rational v = j > 0 ? prev[j - 1] : Rational(0);
      if (j < r) v += (m * j - a) * prev[j];
      row[j] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Rational noncentral_whitney_sum(const Rational& m, const Rational& a,
                                unsigned n, unsigned k) {
  if (m == 0)
    throw std::domain_error("noncentral_whitney_sum: m must be nonzero");
  if (k > n) return Rational(0);
  Rational sum(0);
  for (unsigned j = k; j <= n; ++j)
    sum += Rational(binomial(n, j)) * int_pow(-a, n - j) * int_pow(m, j - k) *
           Rational(stirling2(j, k));
  return sum;
}

Rational whitney(const Rational& m, unsigned n, unsigned k) {
  return noncentral_whitney(m, Rational(-1), n, k);
}

}  // namespace dowling
