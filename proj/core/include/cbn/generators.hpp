#pragma once

#include "cbn/digraph.hpp"

#include <cstddef>
#include <random>

namespace cbn {

/// Uniform-ish random digraph: each ordered pair (self-loops included) is an
/// edge with probability `edge_probability`.
[[nodiscard]] Digraph random_digraph(std::size_t n, double edge_probability, std::mt19937_64& rng);

/// Random strongly connected digraph: a random Hamiltonian cycle plus extra
/// edges drawn with `edge_probability`.
[[nodiscard]] Digraph random_strongly_connected(std::size_t n, double edge_probability, std::mt19937_64& rng);

/// Random strongly connected digraph whose loop number is a multiple of
/// `period`: nodes get a random class mod `period` and edges only go from
/// class k to class k+1. Requires n >= period.
[[nodiscard]] Digraph random_periodic(std::size_t n, std::size_t period, double edge_probability,
                                      std::mt19937_64& rng);

} // namespace cbn
