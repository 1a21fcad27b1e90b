#include "eqgen/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace eqgen {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 1) throw std::invalid_argument("parts must be positive");
    if (i > 0 && p_[i] > p_[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("rows are 1-based");
  return i <= length() ? p_[i - 1] : 0;
}

int Partition::transpose_part(int j) const {
  if (j < 1) throw std::out_of_range("columns are 1-based");
  int n = 0;
  for (int v : p_)
    if (v >= j) ++n;
  return n;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int j = 1; j <= (p_.empty() ? 0 : p_[0]); ++j) t.push_back(transpose_part(j));
  return Partition(std::move(t));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= p_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

int Partition::arm(Cell e) const {
  if (!contains(e)) throw std::out_of_range("cell outside the diagram");
  return part(e.i) - e.j;
}

int Partition::leg(Cell e) const {
  if (!contains(e)) throw std::out_of_range("cell outside the diagram");
  return transpose_part(e.j) - e.i;
}

int Partition::hook(Cell e) const { return arm(e) + leg(e) + 1; }

long Partition::kappa() const {
  long k = 0;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= p_[i - 1]; ++j) k += j - i;
  return 2 * k;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int v : p_) ++m[v];
  return m;
}

mpz_class Partition::z_order() const {
  mpz_class z = 1;
  for (const auto& [part, mult] : multiplicities()) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), mult);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, mult);
    z *= f * pw;
  }
  return z;
}

namespace {
void enumerate_rec(int n, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int first = std::min(n, maxpart); first >= 1; --first) {
    acc.push_back(first);
    enumerate_rec(n - first, first, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(n, n, acc, out);
  return out;
}

mpz_class partition_count(int n) {
  // Euler recurrence with pentagonal numbers.
  static std::vector<mpz_class> cache{1};
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    mpz_class v = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      mpz_class s = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) v += s * cache[m - g1];
      if (g2 <= m) v += s * cache[m - g2];
    }
    cache.push_back(v);
  }
  return cache[n];
}

int MultiPartition::total_size() const {
  int s = 0;
  for (const auto& p : c_) s += p.size();
  return s;
}

namespace {
void multi_rec(int N, int k, std::vector<Partition>& acc, std::vector<MultiPartition>& out) {
  if (N == 0) {
    if (k == 0) out.push_back(MultiPartition(acc));
    return;
  }
  if (N == 1) {
    for (const auto& p : enumerate_partitions(k)) {
      acc.push_back(p);
      multi_rec(0, 0, acc, out);
      acc.pop_back();
    }
    return;
  }
  for (int sz = k; sz >= 0; --sz) {
    for (const auto& p : enumerate_partitions(sz)) {
      acc.push_back(p);
      multi_rec(N - 1, k - sz, acc, out);
      acc.pop_back();
    }
  }
}
}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(int N, int k) {
  if (N < 1) throw std::invalid_argument("rank must be positive");
  if (k < 0) throw std::invalid_argument("size must be nonnegative");
  std::vector<MultiPartition> out;
  std::vector<Partition> acc;
  multi_rec(N, k, acc, out);
  return out;
}

}  // namespace eqgen
