#pragma once

#include "feasreg/enumeration.hpp"
#include "feasreg/graph.hpp"
#include "feasreg/permutation.hpp"

#include <cstddef>

namespace feasreg {

/// Ov_{k,Av(B)}: vertices Av_{k-1}(B), one edge per pi in Av_k(B) from its
/// first-(k-1) pattern to its last-(k-1) pattern. Vertices and edges are in
/// lexicographic label order, so ids are stable.
struct OverlapGraph {
  std::size_t k = 0;
  PatternSet patterns;
  DirectedMultigraph<Permutation> graph;
};

OverlapGraph build_overlap_graph(std::size_t k, const PatternSet& patterns, const EnumerationLimits& limits = {});

/// W_k(sigma): the walk whose i-th edge is the pattern of sigma's i-th window
/// of size k. Throws InvalidArgument if a window is not an edge (sigma lies
/// outside the class) or |sigma| < k.
Walk walk_of(const OverlapGraph& og, const Permutation& sigma);

/// Appends one value to a 312-avoider so that its last k entries induce
/// `next`, where be_{k-1}(next) = en_{k-1}(sigma). Pattern 312 stays avoided.
Permutation extend_312(const Permutation& sigma, const Permutation& next);

/// A 312-avoider of size |w|+k-1 whose k-walk is w, built by repeated
/// extend_312 from the first edge label.
Permutation realize_walk_312(const OverlapGraph& og, const Walk& w);

/// A permutation of the graph's class whose k-walk is w, found by
/// depth-first search over single-value appends. Throws InvalidArgument when
/// no such permutation exists.
Permutation realize_walk(const OverlapGraph& og, const Walk& w);

}  // namespace feasreg
