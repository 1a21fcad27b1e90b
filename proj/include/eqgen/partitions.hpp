#ifndef EQGEN_PARTITIONS_HPP
#define EQGEN_PARTITIONS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace eqgen {

// A cell of a Young diagram in English notation, 1-based: row i grows down,
// column j grows right. (i,j) belongs to mu iff i <= length and j <= mu_i.
struct Cell {
  int i = 1;
  int j = 1;
  auto operator<=>(const Cell&) const = default;
};

// Immutable integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return p_; }
  int size() const;              // |mu|
  int length() const { return static_cast<int>(p_.size()); }
  int part(int i) const;         // 1-based, 0 beyond the diagram
  int transpose_part(int j) const;
  Partition transpose() const;
  bool contains(Cell e) const { return e.i >= 1 && e.j >= 1 && e.j <= part(e.i); }
  std::vector<Cell> cells() const;

  // arm a(e) = mu_i - j, leg l(e) = mu^t_j - i, hook = arm + leg + 1.
  int arm(Cell e) const;
  int leg(Cell e) const;
  int hook(Cell e) const;

  // kappa = 2 sum_{(i,j)} (j - i); always even, odd under transposition.
  long kappa() const;
  // Cycle-type data: part-value multiplicities and the centralizer order
  // z = prod_i i^{m_i} m_i!.
  std::map<int, int> multiplicities() const;
  mpz_class z_order() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> p_;
};

// All partitions of n, each once, in decreasing lexicographic order. The
// order is part of the contract: serialized output must be reproducible.
std::vector<Partition> enumerate_partitions(int n);

mpz_class partition_count(int n);

// Ordered N-tuple of partitions; indexes a fixed point of instanton number
// sum of the component sizes.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> comps) : c_(std::move(comps)) {}
  const std::vector<Partition>& components() const { return c_; }
  int rank() const { return static_cast<int>(c_.size()); }
  int total_size() const;
  auto operator<=>(const MultiPartition&) const = default;

 private:
  std::vector<Partition> c_;
};

// All N-tuples of total size k. Deterministic order: component sizes run
// through compositions with the first component largest first; within a
// size, components in decreasing lexicographic order.
std::vector<MultiPartition> enumerate_multipartitions(int N, int k);

}  // namespace eqgen

#endif
