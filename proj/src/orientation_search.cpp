#include "orientation_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace z3flow {

namespace {

constexpr long long kMaxTailTable = 1 << 18;

int mod3(int x) { return ((x % 3) + 3) % 3; }

}  // namespace

PathReversalSolver::PathReversalSolver(const DenseGraph& g)
    : n_(g.n()), m_(g.m()) {
  first_.reserve(m_);
  second_.reserve(m_);
  for (auto [a, b] : g.edge_ends()) {
    first_.push_back(a);
    second_.push_back(b);
  }
  forward_.assign(m_, 1);
  out_.assign(n_, 0);
  for (int k = 0; k < m_; ++k) ++out_[first_[k]];

  incidence_start_.assign(n_ + 1, 0);
  for (int k = 0; k < m_; ++k) {
    ++incidence_start_[first_[k] + 1];
    ++incidence_start_[second_[k] + 1];
  }
  std::partial_sum(incidence_start_.begin(), incidence_start_.end(),
                   incidence_start_.begin());
  incidence_.assign(2 * m_, 0);
  std::vector<int> fill(incidence_start_.begin(), incidence_start_.end() - 1);
  for (int k = 0; k < m_; ++k) {
    incidence_[fill[first_[k]]++] = k;
    incidence_[fill[second_[k]]++] = k;
  }
  excess_.assign(n_, 0);
  parent_edge_.assign(n_, -1);
  queue_.assign(n_, 0);
  stamp_.assign(n_, 0);
}

bool PathReversalSolver::solve(std::span<const int> target_out) {
  stuck_.clear();
  for (int v = 0; v < n_; ++v) excess_[v] = out_[v] - target_out[v];
  for (int v = 0; v < n_; ++v) {
    while (excess_[v] > 0) {
      ++epoch_;
      int qhead = 0, qtail = 0;
      queue_[qtail++] = v;
      stamp_[v] = epoch_;
      int found = -1;
      while (qhead < qtail && found < 0) {
        int x = queue_[qhead++];
        for (int i = incidence_start_[x]; i < incidence_start_[x + 1]; ++i) {
          int k = incidence_[i];
          if (tail(k) != x) continue;
          int y = head(k);
          if (stamp_[y] == epoch_) continue;
          stamp_[y] = epoch_;
          parent_edge_[y] = k;
          if (excess_[y] < 0) {
            found = y;
            break;
          }
          queue_[qtail++] = y;
        }
      }
      if (found < 0) {
        stuck_.assign(queue_.begin(), queue_.begin() + qtail);
        std::sort(stuck_.begin(), stuck_.end());
        return false;
      }
      for (int y = found; y != v;) {
        int k = parent_edge_[y];
        int x = tail(k);
        forward_[k] ^= 1;
        --out_[x];
        ++out_[y];
        y = x;
      }
      --excess_[v];
      ++excess_[found];
    }
  }
  return true;
}

ResidueSearch::ResidueSearch(const DenseGraph& g)
    : g_(g), solver_(g), candidates_(g.n()), target_(g.n(), 0) {}

bool ResidueSearch::feasible(std::span<const int> residue) {
  const int n = g_.n();
  double total = 1;
  for (int v = 0; v < n; ++v) {
    std::vector<int>& c = candidates_[v];
    c.clear();
    const int d = g_.degree(v);
    for (int o = mod3(2 * (residue[v] + d)); o <= d; o += 3) c.push_back(o);
    if (c.empty()) return false;
    total *= static_cast<double>(c.size());
  }

  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
    return candidates_[a].size() > candidates_[b].size();
  });

  // The tail is the longest suffix whose combination count stays near the
  // square root of the total, so both halves have comparable size.
  const double tail_budget =
      std::min<double>(kMaxTailTable, std::max(1.0, std::sqrt(total)));
  long long tail_count = 1;
  head_size_ = n;
  while (head_size_ > 0) {
    long long next = tail_count *
                     static_cast<long long>(candidates_[order_[head_size_ - 1]].size());
    if (next > tail_budget && tail_count > 1) break;
    if (next > kMaxTailTable) break;
    tail_count = next;
    --head_size_;
  }

  tail_table_.clear();
  tail_table_.reserve(tail_count);
  tail_min_ = tail_max_ = 0;
  for (std::size_t p = head_size_; p < order_.size(); ++p) {
    tail_min_ += candidates_[order_[p]].front();
    tail_max_ += candidates_[order_[p]].back();
  }
  for (long long code = 0; code < tail_count; ++code) {
    long long rest = code;
    int sum = 0;
    for (std::size_t p = head_size_; p < order_.size(); ++p) {
      const auto& c = candidates_[order_[p]];
      sum += c[rest % static_cast<long long>(c.size())];
      rest /= static_cast<long long>(c.size());
    }
    tail_table_.emplace_back(sum, code);
  }
  std::sort(tail_table_.begin(), tail_table_.end());

  suffix_min_.assign(head_size_ + 1, 0);
  suffix_max_.assign(head_size_ + 1, 0);
  for (std::size_t p = head_size_; p-- > 0;) {
    suffix_min_[p] = suffix_min_[p + 1] + candidates_[order_[p]].front();
    suffix_max_[p] = suffix_max_[p + 1] + candidates_[order_[p]].back();
  }
  return walk(0, 0);
}

bool ResidueSearch::walk(std::size_t pos, int partial) {
  const int m = g_.m();
  if (pos == head_size_) return try_tail_combinations(m - partial);
  const int v = order_[pos];
  for (int o : candidates_[v]) {
    int p = partial + o;
    if (p + suffix_min_[pos + 1] + tail_min_ > m) break;
    if (p + suffix_max_[pos + 1] + tail_max_ < m) continue;
    target_[v] = o;
    if (walk(pos + 1, p)) return true;
  }
  return false;
}

bool ResidueSearch::try_tail_combinations(int need) {
  auto lo = std::lower_bound(tail_table_.begin(), tail_table_.end(),
                             std::make_pair(need, -1LL));
  for (auto it = lo; it != tail_table_.end() && it->first == need; ++it) {
    long long rest = it->second;
    for (std::size_t p = head_size_; p < order_.size(); ++p) {
      const auto& c = candidates_[order_[p]];
      target_[order_[p]] = c[rest % static_cast<long long>(c.size())];
      rest /= static_cast<long long>(c.size());
    }
    ++tried_;
    if (solver_.solve(target_)) return true;
  }
  return false;
}

}  // namespace z3flow
