#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "resistor/graph.hpp"

namespace resistor {

/// Vertex-indexed vector storing only nonzero entries, sorted by index.
class SparseVector {
 public:
  struct Entry {
    Vertex index;
    double value;
    bool operator==(const Entry&) const = default;
  };

  SparseVector() = default;
  explicit SparseVector(std::size_t dimension) : dimension_(dimension) {}

  /// Sorts, sums repeated indices and drops zeros.
  static SparseVector from_entries(std::size_t dimension, std::vector<Entry> entries);
  static SparseVector from_dense(std::span<const double> dense);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Value at u (zero when not stored).
  double at(Vertex u) const;
  bool contains(Vertex u) const;

  std::vector<double> to_dense() const;
  double norm1() const;
  double norm2() const;
  /// Sum over the common support.
  double dot(const SparseVector& other) const;

  SparseVector scaled(double factor) const;
  /// Entrywise division; kept separate from scaled(1/x) so results match the
  /// dense kernels bit for bit.
  SparseVector divided(double divisor) const;
  /// this - c * x, merged over the union of supports; exact zeros are dropped.
  SparseVector minus_scaled(double c, const SparseVector& x) const;

  bool operator==(const SparseVector&) const = default;

 private:
  friend class SparseAccumulator;
  std::size_t dimension_ = 0;
  std::vector<Entry> entries_;
};

/// Dense scratch with a touched-index list, so that building a sparse result
/// costs O(touched) rather than O(n) after the one-time allocation.
/// Reusable across queries on graphs of the same size.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(std::size_t dimension);

  std::size_t dimension() const { return values_.size(); }

  void add(Vertex u, double value) {
    if (!marked_[u]) {
      marked_[u] = 1;
      touched_.push_back(u);
    }
    values_[u] += value;
  }

  double value(Vertex u) const { return values_[u]; }
  std::span<const Vertex> touched() const { return touched_; }

  /// Emits the nonzero entries in ascending index order and resets.
  SparseVector extract();
  /// Same, with each value multiplied by scale[u] on the way out.
  SparseVector extract(std::span<const double> scale);
  void clear();

 private:
  std::vector<double> values_;
  std::vector<unsigned char> marked_;
  std::vector<Vertex> touched_;
};

}  // namespace resistor
