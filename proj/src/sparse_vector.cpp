#include "resistor/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

#include "resistor/errors.hpp"

namespace resistor {

SparseVector SparseVector::from_entries(std::size_t dimension, std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out(dimension);
  for (const Entry& e : entries) {
    if (e.index >= dimension) throw IndexError("sparse entry index out of range");
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
    } else {
      out.entries_.push_back(e);
    }
  }
  std::erase_if(out.entries_, [](const Entry& e) { return e.value == 0.0; });
  return out;
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector out(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) out.entries_.push_back({static_cast<Vertex>(i), dense[i]});
  }
  return out;
}

double SparseVector::at(Vertex u) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), u,
                                   [](const Entry& e, Vertex x) { return e.index < x; });
  return it != entries_.end() && it->index == u ? it->value : 0.0;
}

bool SparseVector::contains(Vertex u) const { return at(u) != 0.0; }

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dimension_, 0.0);
  for (const Entry& e : entries_) out[e.index] = e.value;
  return out;
}

double SparseVector::norm1() const {
  double s = 0.0;
  for (const Entry& e : entries_) s += std::abs(e.value);
  return s;
}

double SparseVector::norm2() const {
  double s = 0.0;
  for (const Entry& e : entries_) s += e.value * e.value;
  return std::sqrt(s);
}

double SparseVector::dot(const SparseVector& other) const {
  double s = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      s += a->value * b->value;
      ++a;
      ++b;
    }
  }
  return s;
}

SparseVector SparseVector::scaled(double factor) const {
  SparseVector out(dimension_);
  out.entries_.reserve(entries_.size());
  for (const Entry& e : entries_) {
    const double v = e.value * factor;
    if (v != 0.0) out.entries_.push_back({e.index, v});
  }
  return out;
}

SparseVector SparseVector::divided(double divisor) const {
  SparseVector out(dimension_);
  out.entries_.reserve(entries_.size());
  for (const Entry& e : entries_) {
    const double v = e.value / divisor;
    if (v != 0.0) out.entries_.push_back({e.index, v});
  }
  return out;
}

SparseVector SparseVector::minus_scaled(double c, const SparseVector& x) const {
  if (x.dimension_ != dimension_) throw DimensionError("sparse vector dimensions differ");
  SparseVector out(dimension_);
  out.entries_.reserve(entries_.size() + x.entries_.size());
  auto a = entries_.begin();
  auto b = x.entries_.begin();
  auto emit = [&out](Vertex u, double v) {
    if (v != 0.0) out.entries_.push_back({u, v});
  };
  while (a != entries_.end() || b != x.entries_.end()) {
    if (b == x.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      emit(a->index, a->value);
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      emit(b->index, 0.0 - c * b->value);
      ++b;
    } else {
      emit(a->index, a->value - c * b->value);
      ++a;
      ++b;
    }
  }
  return out;
}

SparseAccumulator::SparseAccumulator(std::size_t dimension)
    : values_(dimension, 0.0), marked_(dimension, 0) {}

SparseVector SparseAccumulator::extract() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out(values_.size());
  out.entries_.reserve(touched_.size());
  for (Vertex u : touched_) {
    if (values_[u] != 0.0) out.entries_.push_back({u, values_[u]});
    values_[u] = 0.0;
    marked_[u] = 0;
  }
  touched_.clear();
  return out;
}

SparseVector SparseAccumulator::extract(std::span<const double> scale) {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out(values_.size());
  out.entries_.reserve(touched_.size());
  for (Vertex u : touched_) {
    const double v = values_[u] * scale[u];
    if (v != 0.0) out.entries_.push_back({u, v});
    values_[u] = 0.0;
    marked_[u] = 0;
  }
  touched_.clear();
  return out;
}

void SparseAccumulator::clear() {
  for (Vertex u : touched_) {
    values_[u] = 0.0;
    marked_[u] = 0;
  }
  touched_.clear();
}

}  // namespace resistor
