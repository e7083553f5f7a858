#pragma once

#include "mzv/exactnum.hpp"

#include <vector>

namespace mzv {

using MultiIndex = std::vector<unsigned>;

unsigned abs_index(const MultiIndex &a);
Integer factorial_index(const MultiIndex &a);
MultiIndex add_index(const MultiIndex &a, const MultiIndex &b);
bool index_leq(const MultiIndex &a, const MultiIndex &b);

/// Weak compositions of total into parts entries, lex-descending.
std::vector<MultiIndex> weak_compositions(unsigned total, unsigned parts);

/// Delta_k^n: gamma in N0^n with |gamma| = k, lex-descending.
const std::vector<MultiIndex> &delta_set(unsigned k, unsigned n);

/// All beta in N0^n with |beta| <= bound.
std::vector<MultiIndex> indices_up_to(unsigned bound, unsigned n);

/// u = (u_1..u_d), u_k indexed like delta_set(k, n).
struct CompositionFamily {
  std::vector<MultiIndex> u;
};

/// alpha in N0^d with sum k*alpha_k = d*N + q + n - |beta|.
std::vector<MultiIndex> index_I(unsigned N, const MultiIndex &beta, unsigned d,
                                unsigned q, unsigned n);
/// alpha in N0^d with sum k*alpha_k = total.
std::vector<MultiIndex> weighted_partitions(unsigned total, unsigned d);

std::vector<CompositionFamily> enumerate_V(const MultiIndex &alpha, unsigned n);
Integer count_V(const MultiIndex &alpha, unsigned n);

MultiIndex g_vector(const CompositionFamily &u, unsigned n);

} // namespace mzv
