#include "angulate/word.hpp"

#include <algorithm>

namespace angulate {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& letter : w) {
    if (!out.empty() && out.back().gen == letter.gen && out.back().exp == -letter.exp)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word positive_word(const std::vector<VertexId>& gens) {
  Word out;
  for (const auto& g : gens) out.push_back({g, 1});
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += ' ';
    out += 's' + letter.gen.str();
    if (letter.exp < 0) out += "^-1";
  }
  return out;
}

Word GroupHom::image(const VertexId& gen) const {
  auto it = images.find(gen);
  if (it == images.end()) return {{gen, 1}};
  return it->second;
}

Word GroupHom::apply(const Word& w) const {
  Word out;
  for (const auto& letter : w) {
    const Word img = image(letter.gen);
    if (letter.exp > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      const Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  GroupHom out;
  for (const auto& [gen, img] : inner.images) out.images[gen] = outer.apply(img);
  for (const auto& [gen, img] : outer.images)
    if (!out.images.count(gen)) out.images[gen] = img;
  return out;
}

}  // namespace angulate
