#pragma once

#include <vector>

#include "graphroots/cliques.hpp"
#include "graphroots/graph.hpp"
#include "graphroots/root_result.hpp"

namespace graphroots {

/// Edges of a graph that lie in at least two distinct maximal cliques.
struct ForcedSubgraph {
  Graph forced;                           // on all n vertices
  VertexSet support;                      // non-isolated vertices of `forced`
  std::vector<Edge> edges;                // forced.edges()
  std::vector<std::vector<int>> incidence;  // per edge: indices into CliqueList
};

/// Throws Error(kInvalidArgument) if `cliques` is incomplete.
ForcedSubgraph forced_edges(const Graph& g, const CliqueList& cliques);

enum class Condition { kOk, kI, kII, kIII, kIV, kV };

/// Which root class the last condition tests for.
enum class RootFamily {
  kGirthAtLeast7,       // F connected with girth >= 7
  kBipartiteC4C6Free,   // F connected, bipartite, no C4 and no C6
};

/// First violated condition of the girth-7 characterization, checked in the
/// order (i)..(v):
///   (i)   vertices outside the forced support lie in exactly one maximal clique;
///   (ii)  forced edges lie in exactly two maximal cliques;
///   (iii) forced edges sharing a vertex lie in a common maximal clique;
///   (iv)  every maximal clique meets the support in a star of F;
///   (v)   F is connected and has girth >= 7 (or the bipartite variant).
/// Precondition: g connected and not complete.
Condition check_conditions(const Graph& g, const CliqueList& cliques,
                           const ForcedSubgraph& fs,
                           RootFamily family = RootFamily::kGirthAtLeast7);

/// Builds the root by joining each maximal clique to its star centre: for a
/// forced edge xy in cliques Q, Q' with |Q ∩ V_F| >= |Q' ∩ V_F|, the centre of
/// F[Q ∩ V_F] is x or y and the other one is the centre of F[Q' ∩ V_F].
/// When both stars have two vertices the centres are ambiguous; the first
/// assignment whose square reproduces g is returned.
/// Precondition: check_conditions(g, cliques, fs) == Condition::kOk.
Graph reconstruct_root7(const Graph& g, const CliqueList& cliques,
                        const ForcedSubgraph& fs);

/// Decides whether g is the square of a graph of girth >= 7 and returns the
/// (unique up to isomorphism) root. Works per connected component; complete
/// components get a star root.
RootResult recognize_root7(const Graph& g);

/// Same pipeline for roots that are (C4, C6)-free bipartite graphs.
RootResult recognize_bipartite_c4c6free(const Graph& g);

std::string_view to_string(Condition condition);

}  // namespace graphroots
