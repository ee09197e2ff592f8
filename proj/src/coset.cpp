#include "angulate/coset.hpp"

#include <algorithm>
#include <map>

#include "angulate/budget.hpp"
#include "angulate/error.hpp"

namespace angulate {

namespace {

// One enumeration's mutable state; never shared between threads.
class CosetTable {
 public:
  CosetTable(int generators, std::size_t limit)
      : columns_(2 * generators), limit_(limit) {
    define_row();
  }

  void run(const std::vector<std::vector<int>>& relators) {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (const auto& r : relators) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
      }
      if (!alive(c)) continue;
      for (int x = 0; x < columns_; ++x)
        if (entry(c, x) < 0) define(c, x);
    }
  }

  std::size_t live() const {
    std::size_t count = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) count += parent_[c] == static_cast<int>(c);
    return count;
  }

 private:
  static int column(int letter) { return letter >= 0 ? 2 * letter : 2 * (-letter - 1) + 1; }

  int& entry(int c, int x) { return table_[static_cast<std::size_t>(c) * columns_ + x]; }
  bool alive(int c) const { return parent_[c] == c; }

  int define_row() {
    if (parent_.size() >= limit_)
      throw BudgetExceeded("coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.insert(table_.end(), static_cast<std::size_t>(columns_), -1);
    return c;
  }

  void define(int c, int x) {
    const int d = define_row();
    entry(c, x) = d;
    entry(d, x ^ 1) = c;
  }

  int rep(int k) {
    int root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const int next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k);
    const int b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int g = queue[i];
      for (int x = 0; x < columns_; ++x) {
        const int d = entry(g, x);
        if (d < 0) continue;
        entry(d, x ^ 1) = -1;
        const int mu = rep(g);
        const int nu = rep(d);
        if (entry(mu, x) >= 0)
          merge(nu, entry(mu, x), queue);
        else if (entry(nu, x ^ 1) >= 0)
          merge(mu, entry(nu, x ^ 1), queue);
        else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
        }
      }
    }
  }

  void scan_and_fill(int start, const std::vector<int>& relator) {
    int f = start;
    int b = start;
    int i = 0;
    int j = static_cast<int>(relator.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, column(relator[i])) >= 0) f = entry(f, column(relator[i++]));
      if (i > j) {
        if (f != start) coincidence(f, start);
        return;
      }
      while (j >= i && entry(b, column(relator[j]) ^ 1) >= 0) b = entry(b, column(relator[j--]) ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, column(relator[i])) = b;
        entry(b, column(relator[i]) ^ 1) = f;
        return;
      }
      define(f, column(relator[i]));
    }
  }

  int columns_;
  std::size_t limit_;
  std::vector<int> table_;
  std::vector<int> parent_;
};

}  // namespace

std::size_t coset_enumerate(const CosetProblem& problem, std::size_t max_cosets) {
  if (problem.generators < 0) throw InvalidArgument("negative generator count");
  for (const auto& r : problem.relators)
    for (int letter : r)
      if (letter >= problem.generators || -letter - 1 >= problem.generators)
        throw InvalidArgument("relator letter out of range");
  CosetTable table(problem.generators, max_cosets ? max_cosets : budgets().coset_table);
  table.run(problem.relators);
  return table.live();
}

CosetProblem coset_problem(const Presentation& presentation, const std::vector<Word>& extra) {
  std::map<VertexId, int> index;
  for (const auto& g : presentation.generators)
    index.emplace(g, static_cast<int>(index.size()));
  CosetProblem out;
  out.generators = static_cast<int>(presentation.generators.size());
  auto encode = [&](const Word& w) {
    std::vector<int> letters;
    for (const auto& l : free_reduce(w)) {
      auto it = index.find(l.gen);
      if (it == index.end()) throw InvalidArgument("relator uses undeclared generator s" + l.gen.str());
      letters.push_back(l.exp > 0 ? it->second : -it->second - 1);
    }
    return letters;
  };
  for (const auto& [lhs, rhs] : presentation.relator_pairs()) {
    auto r = encode(concat(lhs, inverse(rhs)));
    if (!r.empty()) out.relators.push_back(std::move(r));
  }
  for (const auto& w : extra) {
    auto r = encode(w);
    if (!r.empty()) out.relators.push_back(std::move(r));
  }
  return out;
}

std::size_t order_with_squares(const Presentation& presentation, std::size_t max_cosets) {
  std::vector<Word> squares;
  for (const auto& g : presentation.generators) squares.push_back({{g, 1}, {g, 1}});
  return coset_enumerate(coset_problem(presentation, squares), max_cosets);
}

}  // namespace angulate
