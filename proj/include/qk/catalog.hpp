#pragma once

#include <vector>

#include "qk/groupoid.hpp"

namespace qk {

// Multiplication tables (identity at 0) of every group of order <= max_order,
// one per isomorphism class, in a fixed deterministic order. Supports orders
// up to 8.
std::vector<std::vector<std::vector<int>>> small_group_tables(int max_order);

// Every isomorphism class of groupoid with at most max_objects objects and
// max_arrows arrows, as disjoint unions of connected components
// Pair(k) x group. Deterministic order.
std::vector<FinGroupoid> groupoid_catalog(int max_objects = 3,
                                          int max_arrows = 8);

// Every action of g on at most max_points points, one per carrier
// relabelling class. The returned actions point at g.
std::vector<GAction> action_catalog(const FinGroupoid& g, int max_points);

// Every functor src -> dst. The returned functors point at src and dst.
std::vector<GroupoidFunctor> functor_catalog(const FinGroupoid& src,
                                             const FinGroupoid& dst);

}  // namespace qk
