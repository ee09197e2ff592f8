#include "angulate/coloured_quiver.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "angulate/error.hpp"

namespace angulate {

std::optional<long long> VertexId::as_integer() const {
  if (name_.empty()) return std::nullopt;
  long long value = 0;
  const char* first = name_.data();
  const char* last = name_.data() + name_.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

ColouredQuiver::ColouredQuiver(int m, std::vector<VertexId> vertices)
    : m_(m), vertices_(std::move(vertices)) {
  if (m < 1) throw InvalidArgument("colour bound m must be >= 1");
  std::set<VertexId> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw InvalidArgument("duplicate vertex id");
  counts_.assign(vertices_.size() * vertices_.size() * static_cast<std::size_t>(m_ + 1), 0);
}

std::optional<std::size_t> ColouredQuiver::find(const VertexId& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t ColouredQuiver::index_of(const VertexId& id) const {
  if (auto index = find(id)) return *index;
  throw InvalidArgument("unknown vertex '" + id.str() + "'");
}

void ColouredQuiver::set_multiplicity(std::size_t i, std::size_t j, int colour, int count) {
  if (colour < 0 || colour > m_) throw InvalidArgument("colour out of range");
  if (count < 0) throw InvalidArgument("negative arrow count");
  counts_.at(slot(i, j, colour)) = count;
}

void ColouredQuiver::add_arrows(std::size_t i, std::size_t j, int colour, int count) {
  set_multiplicity(i, j, colour, multiplicity(i, j, colour) + count);
}

void ColouredQuiver::add_arrow_pair(std::size_t i, std::size_t j, int colour, int count) {
  add_arrows(i, j, colour, count);
  add_arrows(j, i, m_ - colour, count);
}

int ColouredQuiver::total(std::size_t i, std::size_t j) const {
  int sum = 0;
  for (int c = 0; c <= m_; ++c) sum += multiplicity(i, j, c);
  return sum;
}

std::optional<int> ColouredQuiver::colour(std::size_t i, std::size_t j) const {
  std::optional<int> found;
  for (int c = 0; c <= m_; ++c) {
    if (multiplicity(i, j, c) == 0) continue;
    if (found) return std::nullopt;
    found = c;
  }
  return found;
}

std::vector<Arrow> ColouredQuiver::arrows() const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      for (int c = 0; c <= m_; ++c)
        if (int q = multiplicity(i, j, c); q > 0) out.push_back({vertices_[i], vertices_[j], c, q});
  return out;
}

bool operator==(const ColouredQuiver& a, const ColouredQuiver& b) {
  if (a.m_ != b.m_ || a.size() != b.size()) return false;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.find(a.vertices_[i]);
    if (!j) return false;
    to_b[i] = *j;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (int c = 0; c <= a.m_; ++c)
        if (a.multiplicity(i, j, c) != b.multiplicity(to_b[i], to_b[j], c)) return false;
  return true;
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    switch (v.axiom) {
      case Axiom::NoLoops:
        out << "axiom I (no loops) violated at (" << v.from.str() << "," << v.to.str() << ","
            << v.colour << ")\n";
        break;
      case Axiom::Monochromaticity:
        out << "axiom II (monochromaticity) violated at (" << v.from.str() << "," << v.to.str()
            << ")\n";
        break;
      case Axiom::SkewSymmetry:
        out << "axiom III (skew-symmetry) violated at (" << v.from.str() << "," << v.to.str()
            << "," << v.colour << ")\n";
        break;
    }
  }
  return out.str();
}

ValidationReport validate(const ColouredQuiver& q) {
  ValidationReport report;
  const int m = q.m();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int c = 0; c <= m; ++c)
      if (q.multiplicity(i, i, c) > 0)
        report.violations.push_back({Axiom::NoLoops, q.vertex(i), q.vertex(i), c});
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i == j) continue;
      int colours = 0;
      for (int c = 0; c <= m; ++c) colours += q.multiplicity(i, j, c) > 0 ? 1 : 0;
      if (colours > 1)
        report.violations.push_back({Axiom::Monochromaticity, q.vertex(i), q.vertex(j), -1});
      // Reported at the side whose partner is short, so a lone arrow
      // 1 -(0)-> 2 is flagged at (2, 1, m).
      for (int c = 0; c <= m; ++c)
        if (q.multiplicity(j, i, m - c) > q.multiplicity(i, j, c))
          report.violations.push_back({Axiom::SkewSymmetry, q.vertex(i), q.vertex(j), c});
    }
  }
  return report;
}

namespace {

int wrap(int colour, int m) { return ((colour % (m + 1)) + (m + 1)) % (m + 1); }

ColouredQuiver three_step(const ColouredQuiver& q, std::size_t k, bool colour_guard) {
  const int m = q.m();
  const std::size_t n = q.size();
  ColouredQuiver out(m, q.vertices());

  // Step 1: colour shifts at k; arrows not touching k are copied.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (int c = 0; c <= m; ++c) {
        int count = q.multiplicity(i, j, c);
        if (count == 0) continue;
        int shifted = c;
        if (j == k && i != k) shifted = wrap(c + 1, m);
        if (i == k && j != k) shifted = wrap(c - 1, m);
        out.add_arrows(i, j, shifted, count);
      }
    }
  }

  // Step 2: i -(c)-> k -(0)-> j with i != j. Unguarded, c = m is let through
  // in one orientation only (see the header).
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || j == i) continue;
      const int via = q.multiplicity(k, j, 0);
      if (via == 0) continue;
      for (int c = 0; c <= m; ++c) {
        if (c == m && (colour_guard || j < i)) continue;
        const int into = q.multiplicity(i, k, c);
        if (into == 0) continue;
        out.add_arrow_pair(i, j, c, into * via);
      }
    }
  }

  // Step 3: cancel equal numbers of differently coloured parallel arrows.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      while (true) {
        int first = -1;
        int second = -1;
        for (int c = 0; c <= m; ++c) {
          if (out.multiplicity(i, j, c) == 0) continue;
          if (first < 0) {
            first = c;
          } else {
            second = c;
            break;
          }
        }
        if (second < 0) break;
        const int cancel = std::min(out.multiplicity(i, j, first), out.multiplicity(i, j, second));
        out.set_multiplicity(i, j, first, out.multiplicity(i, j, first) - cancel);
        out.set_multiplicity(i, j, second, out.multiplicity(i, j, second) - cancel);
      }
    }
  }
  return out;
}

}  // namespace

ColouredQuiver mutate_formula(const ColouredQuiver& q, const VertexId& k_id) {
  const std::size_t k = q.index_of(k_id);
  const int m = q.m();
  const std::size_t n = q.size();
  auto qq = [&](std::size_t i, std::size_t j, int c) { return q.multiplicity(i, j, wrap(c, m)); };

  ColouredQuiver out(m, q.vertices());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int c = 0; c <= m; ++c) {
        int value = 0;
        if (k == i) {
          value = qq(i, j, c + 1);
        } else if (k == j) {
          value = qq(i, j, c - 1);
        } else {
          int others = 0;
          for (int t = 0; t <= m; ++t)
            if (t != c) others += qq(i, j, t);
          value = qq(i, j, c) - others + (qq(i, k, c) - qq(i, k, c - 1)) * qq(k, j, 0) +
                  qq(i, k, m) * (qq(k, j, c) - qq(k, j, c + 1));
          value = std::max(0, value);
        }
        if (value > 0) out.set_multiplicity(i, j, c, value);
      }
    }
  }
  return out;
}

ColouredQuiver mutate(const ColouredQuiver& q, const VertexId& k) {
  return three_step(q, q.index_of(k), true);
}

ColouredQuiver mutate_without_colour_guard(const ColouredQuiver& q, const VertexId& k) {
  return three_step(q, q.index_of(k), false);
}

ColouredQuiver mutate_path(ColouredQuiver q, const MutationPath& path) {
  for (const auto& k : path) q = mutate(q, k);
  return q;
}

ColouredQuiver a_quiver(int n, int m) {
  if (n < 2) throw InvalidArgument("a_quiver needs n >= 2");
  if (m < 1) throw InvalidArgument("a_quiver needs m >= 1");
  std::vector<VertexId> vertices;
  for (int i = 1; i <= n - 1; ++i) vertices.emplace_back(i);
  ColouredQuiver q(m, std::move(vertices));
  for (std::size_t i = 0; i + 1 < q.size(); ++i) q.add_arrow_pair(i, i + 1, 0);
  return q;
}

ColouredQuiver relabel(const ColouredQuiver& q,
                       const std::vector<std::pair<VertexId, VertexId>>& renaming) {
  std::vector<VertexId> vertices = q.vertices();
  for (auto& v : vertices) {
    for (const auto& [from, to] : renaming) {
      if (v == from) {
        v = to;
        break;
      }
    }
  }
  ColouredQuiver out(q.m(), std::move(vertices));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (int c = 0; c <= q.m(); ++c)
        if (int count = q.multiplicity(i, j, c)) out.set_multiplicity(i, j, c, count);
  return out;
}

namespace {

// Entry code of the ordered pair (i, j): 0 for no arrows, otherwise it packs
// colour and multiplicity of the (monochromatic) bundle.
std::vector<std::int32_t> entry_table(const ColouredQuiver& q) {
  const std::size_t n = q.size();
  std::vector<std::int32_t> table(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int total = q.total(i, j);
      if (total == 0) continue;
      auto c = q.colour(i, j);
      if (!c) throw InvalidArgument("canonical_form needs a monochromatic quiver");
      table[i * n + j] = 1 + *c + (q.m() + 1) * (total - 1);
    }
  }
  return table;
}

struct CanonicalSearch {
  std::size_t n;
  const std::vector<std::int32_t>& table;
  std::vector<std::size_t> order;
  std::vector<bool> used;
  std::vector<std::int32_t> current;
  std::vector<std::int32_t> best;
  bool have_best = false;

  // Code layout: when vertex number p (in the new order) is placed, the
  // entries (q,p), (p,q) for q < p are appended, so a prefix of the code is
  // fixed by a prefix of the order and the search can prune.
  void run(std::size_t p) {
    if (p == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      const std::size_t mark = current.size();
      for (std::size_t qpos = 0; qpos < p; ++qpos) {
        current.push_back(table[order[qpos] * n + v]);
        current.push_back(table[v * n + order[qpos]]);
      }
      bool prune = false;
      if (have_best) {
        auto cmp = std::lexicographical_compare_three_way(current.begin(), current.end(),
                                                          best.begin(), best.begin() + current.size());
        prune = cmp > 0;
      }
      if (!prune) {
        used[v] = true;
        order[p] = v;
        run(p + 1);
        used[v] = false;
      }
      current.resize(mark);
    }
  }
};

}  // namespace

CanonicalKey canonical_form(const ColouredQuiver& q) {
  if (q.size() > kMaxCanonicalVertices)
    throw BudgetExceeded("canonical_form supports at most " +
                         std::to_string(kMaxCanonicalVertices) + " vertices");
  const auto table = entry_table(q);
  CanonicalSearch search{q.size(), table, std::vector<std::size_t>(q.size()),
                         std::vector<bool>(q.size(), false), {}, {}, false};
  search.run(0);
  return CanonicalKey{q.m(), static_cast<int>(q.size()), std::move(search.best)};
}

std::string fingerprint(const ColouredQuiver& q) {
  std::ostringstream out;
  out << q.m() << '|';
  for (const auto& v : q.vertices()) out << v.str() << ',';
  out << '|';
  for (const auto& a : q.arrows())
    out << a.from.str() << '>' << a.to.str() << ':' << a.colour << 'x' << a.mult << ';';
  return out.str();
}

std::vector<MutationNode> mutation_ball(const ColouredQuiver& root, int depth) {
  std::vector<MutationNode> nodes{{root, {}}};
  std::unordered_set<std::string> seen{fingerprint(root)};
  std::size_t frontier_begin = 0;
  for (int d = 0; d < depth; ++d) {
    const std::size_t frontier_end = nodes.size();
    for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
      for (const auto& k : root.vertices()) {
        ColouredQuiver next = mutate(nodes[idx].quiver, k);
        if (!seen.insert(fingerprint(next)).second) continue;
        MutationPath path = nodes[idx].path;
        path.push_back(k);
        nodes.push_back({std::move(next), std::move(path)});
      }
    }
    frontier_begin = frontier_end;
  }
  return nodes;
}

std::vector<CanonicalKey> mutation_class(const ColouredQuiver& root, std::size_t max_classes) {
  std::set<CanonicalKey> seen{canonical_form(root)};
  std::deque<ColouredQuiver> queue{root};
  while (!queue.empty()) {
    ColouredQuiver q = std::move(queue.front());
    queue.pop_front();
    for (const auto& k : q.vertices()) {
      ColouredQuiver next = mutate(q, k);
      if (!seen.insert(canonical_form(next)).second) continue;
      if (seen.size() > max_classes) throw BudgetExceeded("mutation class exceeds class budget");
      queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace angulate
