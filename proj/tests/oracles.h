#pragma once

// Brute-force reference computations used only by the tests. They share no
// code path with the library algorithms they check.

#include "rank74/face_list.h"
#include "rank74/graph.h"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rank74::oracle {

// Vertex count by repeated min-label propagation over the endpoint identifications.
std::size_t vertex_count(const FaceList& faces);

// Label count after identifying the given label pairs, by the same propagation.
std::size_t label_classes(const FaceList& faces, const std::vector<std::pair<Label, Label>>& pairs);

// Adjacency-count matrix of a graph.
std::vector<std::vector<int>> adjacency(const Graph& g);

// Number of 4-tuples (a,b,c,d) of distinct nodes with a-b, b-c, c-d edges, by full enumeration.
std::size_t simple_3_paths(const Graph& g);
std::size_t simple_3_paths_between(const Graph& g, Node u, Node v);

// Count of node permutations preserving adjacency counts, by trying all n!.
std::size_t automorphism_count_naive(const Graph& g);

// sum over perms of 2^(cycles on edges), edges represented as sorted node pairs.
std::uint64_t burnside_sum(const Graph& g, const std::vector<Permutation>& perms);

} // namespace rank74::oracle
