#pragma once

#include <cstdint>
#include <random>

#include "graphroots/graph.hpp"

namespace graphroots::gen {

Graph complete(int n);
Graph cycle(int n);  // n >= 3
Graph path(int n);
Graph star(int leaves);  // centre 0
Graph petersen();
Graph heawood();

/// Replaces every edge by a path of length 2; the new vertices follow the
/// original ones in edge order.
Graph subdivision(const Graph& g);

/// Centre 0 with one path of each given length attached.
Graph spider(std::span<const int> leg_lengths);

/// Uniform labelled tree on n vertices via a Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// Connected graph of girth >= min_girth: a random tree plus up to `extra`
/// random edges, each kept only if it closes no short cycle.
Graph random_graph_with_girth(int n, int extra, int min_girth, std::mt19937_64& rng);

/// Erdos-Renyi G(n, p).
Graph gnp(int n, double p, std::mt19937_64& rng);

/// Applies the permutation: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace graphroots::gen
