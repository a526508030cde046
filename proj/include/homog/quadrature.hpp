#pragma once

#include <vector>

namespace homog {

// Composite Simpson rule on an arbitrary strictly increasing node set.
// Consecutive node triples get the quadratic-exact weights
//   (h1+h2)/6 * [ (2 - h2/h1) v0 + (h1+h2)^2/(h1 h2) v1 + (2 - h1/h2) v2 ],
// a trailing odd interval is closed with the trapezoid rule.  Throws if the
// nodes are not strictly increasing or sizes mismatch.
double simpson_nonuniform(const std::vector<double>& t, const std::vector<double>& v);

// Per-node weights of the same rule (sum_k w_k v_k == simpson_nonuniform).
std::vector<double> simpson_weights(const std::vector<double>& t);

// Power-graded time grid t_k = T (k/n)^gamma, k = 0..n; gamma = 1 is uniform.
// Clusters nodes near t = 0 where the heat semigroup burns off the rough
// initial layer.
std::vector<double> graded_schedule(double T, int n, double gamma);

}  // namespace homog
