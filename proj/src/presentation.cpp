#include "angulate/presentation.hpp"

#include <sstream>

#include "angulate/correspondence.hpp"
#include "angulate/error.hpp"

namespace angulate {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Commute:
      return "commute";
    case RelationKind::Braid:
      return "braid";
    case RelationKind::Cycle3:
      return "cycle3";
  }
  return "unknown";
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : generators) out << " s" << g.str();
  out << '\n';
  for (const auto& r : relations) {
    for (std::size_t k = 0; k < r.sides.size(); ++k) out << (k ? " = " : "") << to_string(r.sides[k]);
    out << '\n';
  }
  return out.str();
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json out;
  out["generators"] = nlohmann::json::array();
  for (const auto& g : generators) out["generators"].push_back("s" + g.str());
  out["relations"] = nlohmann::json::array();
  for (const auto& r : relations) {
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& side : r.sides) sides.push_back(to_string(side));
    out["relations"].push_back({{"kind", to_string(r.kind)}, {"sides", std::move(sides)}});
  }
  return out;
}

std::vector<std::pair<Word, Word>> Presentation::relator_pairs() const {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& r : relations)
    for (std::size_t k = 0; k + 1 < r.sides.size(); ++k) out.emplace_back(r.sides[k], r.sides[k + 1]);
  return out;
}

Presentation presentation_of(const ColouredQuiver& q) {
  const auto report = validate(q);
  if (!report.ok()) throw InvalidArgument("not an m-coloured quiver: " + report.describe());
  const std::size_t size = q.size();
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (q.total(i, j) > 1)
        throw InvalidArgument("parallel arrows " + q.vertex(i).str() + " -> " + q.vertex(j).str() +
                              ": not of mutation type A");

  Presentation out;
  out.generators = q.vertices();
  const auto& v = q.vertices();
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (!q.adjacent(i, j))
        out.relations.push_back(
            {RelationKind::Commute, {positive_word({v[i], v[j]}), positive_word({v[j], v[i]})}});
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (q.adjacent(i, j))
        out.relations.push_back({RelationKind::Braid,
                                 {positive_word({v[i], v[j], v[i]}), positive_word({v[j], v[i], v[j]})}});

  const int target = 2 * q.m() + 1;
  auto sum = [&](std::size_t a, std::size_t b, std::size_t c) {
    return *q.colour(a, b) + *q.colour(b, c) + *q.colour(c, a);
  };
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!q.adjacent(i, j)) continue;
      for (std::size_t k = j + 1; k < size; ++k) {
        if (!q.adjacent(i, k) || !q.adjacent(j, k)) continue;
        std::size_t b = j;
        std::size_t c = k;
        if (sum(i, j, k) != target) {
          if (sum(i, k, j) != target)
            throw InvalidArgument("triangle " + v[i].str() + "," + v[j].str() + "," + v[k].str() +
                                  " has no orientation with colour sum 2m+1");
          std::swap(b, c);
        }
        out.relations.push_back({RelationKind::Cycle3,
                                 {positive_word({v[i], v[b], v[c], v[i]}),
                                  positive_word({v[b], v[c], v[i], v[b]}),
                                  positive_word({v[c], v[i], v[b], v[c]})}});
      }
    }
  }
  return out;
}

Presentation standard_presentation(int strands) {
  if (strands < 2) throw InvalidArgument("standard presentation needs at least 2 strands");
  return presentation_of(a_quiver(strands, 1));
}

GroupHom phi(const ColouredQuiver& q, const VertexId& k) {
  const std::size_t kk = q.index_of(k);
  GroupHom h;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const VertexId& g = q.vertex(i);
    if (q.multiplicity(kk, i, 0) > 0)
      h.images[g] = {{k, 1}, {g, 1}, {k, -1}};
    else
      h.images[g] = {{g, 1}};
  }
  return h;
}

GroupHom phi_inverse(const ColouredQuiver& q, const VertexId& k) {
  const ColouredQuiver mutated = mutate(q, k);
  const std::size_t kk = mutated.index_of(k);
  GroupHom h;
  for (std::size_t i = 0; i < mutated.size(); ++i) {
    const VertexId& g = mutated.vertex(i);
    if (mutated.multiplicity(kk, i, mutated.m()) > 0)
      h.images[g] = {{k, -1}, {g, 1}, {k, 1}};
    else
      h.images[g] = {{g, 1}};
  }
  return h;
}

GroupHom compose_chain(const ColouredQuiver& q, const MutationPath& path) {
  GroupHom total;
  for (const auto& g : q.vertices()) total.images[g] = {{g, 1}};
  ColouredQuiver current = q;
  for (const auto& k : path) {
    total = compose(phi(current, k), total);
    current = mutate(current, k);
  }
  return total;
}

BraidWord Translation::apply(const Word& w) const {
  BraidWord out{strands, {}};
  for (const auto& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw InvalidArgument("no translation for generator s" + l.gen.str());
    out = out * (l.exp > 0 ? it->second : it->second.inverse());
  }
  return out;
}

Translation translation_along(int n, int m, const MutationPath& path) {
  ColouredQuiver current = a_quiver(n, m);
  Translation t;
  t.strands = n;
  for (int j = 1; j <= n - 1; ++j) t.images[VertexId(j)] = BraidWord{n, {{j, 1}}};
  for (const auto& k : path) {
    const GroupHom back = phi_inverse(current, k);
    Translation next{n, {}};
    for (const auto& g : current.vertices())
      next.images[g] = to_braid_word(normal_form(t.apply(back.image(g))));
    t = std::move(next);
    current = mutate(current, k);
  }
  return t;
}

Translation translation_for(const Angulation& angulation) {
  const ChainLabelling chain = chain_labelling(angulation);
  const Translation by_label = translation_along(angulation.n(), angulation.m(), chain.path);
  Translation out{by_label.strands, {}};
  for (const auto& [d, label] : chain.labels) out.images[vertex_of(d)] = by_label.images.at(VertexId(label));
  return out;
}

HomReport verify_hom(const Presentation& source, const GroupHom& h, const Translation& target) {
  HomReport report;
  for (const auto& [lhs, rhs] : source.relator_pairs()) {
    ++report.checked;
    if (!equal(target.apply(h.apply(lhs)), target.apply(h.apply(rhs))))
      report.failures.push_back(to_string(lhs) + " = " + to_string(rhs));
  }
  return report;
}

bool kcycle_relation_check(const ColouredQuiver& q, const std::vector<VertexId>& cycle,
                           const Translation& translation) {
  const std::size_t j = cycle.size();
  if (j < 3) throw InvalidArgument("a cycle relation needs at least 3 vertices");
  std::vector<std::size_t> idx;
  for (const auto& v : cycle) idx.push_back(q.index_of(v));
  for (std::size_t a = 0; a < j; ++a)
    for (std::size_t b = a + 1; b < j; ++b)
      if (!q.colour(idx[a], idx[b]) || q.total(idx[a], idx[b]) != 1)
        throw InvalidArgument("vertices " + cycle[a].str() + " and " + cycle[b].str() +
                              " are not joined by a single arrow");
  const int target = 2 * q.m() + 1;
  for (std::size_t a = 0; a < j; ++a)
    for (std::size_t b = a + 1; b < j; ++b)
      for (std::size_t c = b + 1; c < j; ++c)
        if (cycle_colour_sum(q, {cycle[a], cycle[b], cycle[c]}) != target)
          throw InvalidArgument("triple " + cycle[a].str() + "," + cycle[b].str() + "," +
                                cycle[c].str() + " does not have colour sum 2m+1");

  auto shifted = [&](std::size_t r) {
    Word w;
    for (std::size_t s = 0; s <= j; ++s) w.push_back({cycle[(r + s) % j], 1});
    return translation.apply(w);
  };
  const BraidWord first = shifted(0);
  for (std::size_t r = 1; r < j; ++r)
    if (!equal(first, shifted(r))) return false;
  return true;
}

}  // namespace angulate
