#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "resistor/graph.hpp"

namespace resistor {

/// out = D^{-1/2} W D^{-1/2} v, the normalized adjacency applied to v.
void apply_normalized_adjacency(const Graph& g, std::span<const double> v, std::span<double> out);
std::vector<double> apply_normalized_adjacency(const Graph& g, std::span<const double> v);

/// out = P v with P = W D^{-1}.
void apply_walk(const Graph& g, std::span<const double> v, std::span<double> out);

/// out = (I/2 + P/2) v with P = W D^{-1}; column sums of the lazy walk are 1.
void apply_lazy_walk(const Graph& g, std::span<const double> v, std::span<double> out);
std::vector<double> apply_lazy_walk(const Graph& g, std::span<const double> v);

/// T_l(x) by the three-term recurrence.
double chebyshev_t(std::size_t l, double x);

struct ChebyshevNorms {
  /// ||D^{1/2} T_i(P) e_u||_1 for i = 0..k
  std::vector<double> weighted;
  /// ||T_i(P) e_u||_1 for i = 0..k
  std::vector<double> plain;
};

/// Iterates T_{i+1}(P) e_u = 2 P T_i(P) e_u - T_{i-1}(P) e_u on dense vectors.
ChebyshevNorms chebyshev_walk_norms(const Graph& g, Vertex u, std::size_t k);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace resistor
