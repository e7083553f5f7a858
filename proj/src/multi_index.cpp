#include "mzv/multi_index.hpp"

#include "mzv/error.hpp"

#include <map>
#include <mutex>

namespace mzv {

unsigned abs_index(const MultiIndex &a) {
  unsigned s = 0;
  for (unsigned x : a) s += x;
  return s;
}

Integer factorial_index(const MultiIndex &a) {
  Integer r(1);
  for (unsigned x : a) r *= factorial(x);
  return r;
}

MultiIndex add_index(const MultiIndex &a, const MultiIndex &b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "multi-index length mismatch");
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool index_leq(const MultiIndex &a, const MultiIndex &b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

static void compose(unsigned total, unsigned parts, MultiIndex &cur, unsigned pos,
                    std::vector<MultiIndex> &out) {
  if (pos + 1 == parts) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (unsigned v = total + 1; v-- > 0;) {
    cur[pos] = v;
    compose(total - v, parts, cur, pos + 1, out);
  }
}

std::vector<MultiIndex> weak_compositions(unsigned total, unsigned parts) {
  std::vector<MultiIndex> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  MultiIndex cur(parts, 0);
  compose(total, parts, cur, 0, out);
  return out;
}

const std::vector<MultiIndex> &delta_set(unsigned k, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::vector<MultiIndex>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(k, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, weak_compositions(k, n)).first;
  return it->second;
}

std::vector<MultiIndex> indices_up_to(unsigned bound, unsigned n) {
  std::vector<MultiIndex> out;
  for (unsigned t = 0; t <= bound; ++t) {
    auto w = weak_compositions(t, n);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

static void partitions(unsigned remaining, unsigned k, MultiIndex &cur,
                       std::vector<MultiIndex> &out) {
  if (k == 1) {
    cur[0] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned a = 0; a * k <= remaining; ++a) {
    cur[k - 1] = a;
    partitions(remaining - a * k, k - 1, cur, out);
  }
  cur[k - 1] = 0;
}

std::vector<MultiIndex> weighted_partitions(unsigned total, unsigned d) {
  std::vector<MultiIndex> out;
  if (d == 0) return out;
  MultiIndex cur(d, 0);
  partitions(total, d, cur, out);
  return out;
}

std::vector<MultiIndex> index_I(unsigned N, const MultiIndex &beta, unsigned d,
                                unsigned q, unsigned n) {
  long rhs = static_cast<long>(d) * N + q + n - static_cast<long>(abs_index(beta));
  if (rhs < 0) return {};
  return weighted_partitions(static_cast<unsigned>(rhs), d);
}

std::vector<CompositionFamily> enumerate_V(const MultiIndex &alpha, unsigned n) {
  std::vector<CompositionFamily> out(1);
  for (unsigned k = 1; k <= alpha.size(); ++k) {
    auto parts = weak_compositions(alpha[k - 1], static_cast<unsigned>(delta_set(k, n).size()));
    std::vector<CompositionFamily> next;
    next.reserve(out.size() * parts.size());
    for (auto &f : out)
      for (auto &p : parts) {
        CompositionFamily g = f;
        g.u.push_back(p);
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  return out;
}

Integer count_V(const MultiIndex &alpha, unsigned n) {
  Integer c(1);
  for (unsigned k = 1; k <= alpha.size(); ++k) {
    long m = static_cast<long>(delta_set(k, n).size());
    c *= binom_signed(static_cast<long>(alpha[k - 1]) + m - 1, static_cast<unsigned long>(m - 1));
  }
  return c;
}

MultiIndex g_vector(const CompositionFamily &u, unsigned n) {
  MultiIndex g(n, 0);
  for (unsigned k = 1; k <= u.u.size(); ++k) {
    const auto &delta = delta_set(k, n);
    for (size_t t = 0; t < delta.size(); ++t) {
      unsigned c = u.u[k - 1][t];
      if (c == 0) continue;
      for (unsigned i = 0; i < n; ++i) g[i] += c * delta[t][i];
    }
  }
  return g;
}

} // namespace mzv
