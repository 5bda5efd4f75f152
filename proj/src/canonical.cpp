#include "z3flow/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace z3flow {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const DenseGraph& g) : g_(g), n_(g.n()) {}

  CanonicalForm run(std::vector<int>* labeling) {
    std::vector<int> colour(n_, 0);
    refine(colour);
    search(colour);
    if (labeling) *labeling = best_labeling_;
    return CanonicalForm{n_, best_};
  }

 private:
  // 1-dimensional Weisfeiler-Leman on multiplicities. Colours are ranks of
  // sorted signatures, so the result does not depend on the input order.
  void refine(std::vector<int>& colour) const {
    int classes = count_classes(colour);
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> around;
        for (int u = 0; u < n_; ++u) {
          int mu = g_.multiplicity(v, u);
          if (u != v && mu > 0) around.emplace_back(colour[u], mu);
        }
        std::sort(around.begin(), around.end());
        sig[v].push_back(colour[v]);
        for (auto [c, mu] : around) {
          sig[v].push_back(c);
          sig[v].push_back(mu);
        }
      }
      std::vector<std::vector<int>> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int v = 0; v < n_; ++v) {
        colour[v] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
      }
      int now = static_cast<int>(distinct.size());
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colour) {
    std::vector<int> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool twins(int u, int v) const {
    for (int w = 0; w < n_; ++w) {
      if (w != u && w != v && g_.multiplicity(u, w) != g_.multiplicity(v, w)) return false;
    }
    return true;
  }

  void search(const std::vector<int>& colour) {
    std::vector<int> size(n_, 0);
    for (int c : colour) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colour);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      // Swapping twins is an automorphism fixing the partition, so their
      // subtrees yield the same certificates.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) {
        continue;
      }
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int w = 0; w < n_; ++w) next[w] = 2 * colour[w] + (w == v ? 0 : 1);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& position) {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[position[v]] = v;
    std::vector<int> cert;
    cert.reserve(n_ * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) cert.push_back(g_.multiplicity(at[i], at[j]));
    }
    if (!have_best_ || cert < best_) {
      best_ = std::move(cert);
      best_labeling_ = position;
      have_best_ = true;
    }
  }

  const DenseGraph& g_;
  int n_;
  bool have_best_ = false;
  std::vector<int> best_;
  std::vector<int> best_labeling_;
};

}  // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const {
  std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(f.n);
  for (int x : f.certificate) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CanonicalForm canonical_form(const DenseGraph& g, std::vector<int>* labeling) {
  if (g.n() == 0) {
    if (labeling) labeling->clear();
    return CanonicalForm{};
  }
  return Canonizer(g).run(labeling);
}

CanonicalForm canonical_form(const Multigraph& g) { return canonical_form(DenseGraph(g)); }

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

Multigraph to_multigraph(const CanonicalForm& f) {
  Multigraph g = Multigraph::with_vertices(f.n);
  std::size_t k = 0;
  for (int i = 0; i < f.n; ++i) {
    for (int j = i + 1; j < f.n; ++j) {
      for (int r = 0; r < f.certificate[k]; ++r) g.add_edge(i, j);
      ++k;
    }
  }
  return g;
}

}  // namespace z3flow
