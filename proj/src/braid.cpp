#include "angulate/braid.hpp"

#include <algorithm>
#include <sstream>

#include "angulate/budget.hpp"
#include "angulate/error.hpp"

namespace angulate {

void BraidWord::check() const {
  if (strands < 2) throw InvalidArgument("braid words need at least 2 strands");
  for (const auto& l : letters) {
    if (l.gen < 1 || l.gen >= strands)
      throw InvalidArgument("generator s" + std::to_string(l.gen) + " out of range for " +
                            std::to_string(strands) + " strands");
    if (l.exp != 1 && l.exp != -1) throw InvalidArgument("braid exponents must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord out{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->gen, -it->exp});
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands != other.strands) throw InvalidArgument("multiplying braids on different strand counts");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

BraidWord parse_braid(int strands, const std::string& text) {
  BraidWord out{strands, {}};
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int exp = 1;
    std::string body = token;
    if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
      exp = -1;
      body.resize(body.size() - 3);
    }
    if (body.size() < 2 || body[0] != 's' ||
        !std::all_of(body.begin() + 1, body.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("bad braid token '" + token + "'");
    out.letters.push_back({std::stoi(body.substr(1)), exp});
  }
  try {
    out.check();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return out;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out.empty() ? "e" : out;
}

BraidWord to_braid(int strands, const Word& w) {
  BraidWord out{strands, {}};
  for (const auto& l : w) {
    const auto value = l.gen.as_integer();
    if (!value) throw InvalidArgument("generator '" + l.gen.str() + "' is not a standard braid generator");
    out.letters.push_back({static_cast<int>(*value), l.exp});
  }
  out.check();
  return out;
}

Word to_word(const BraidWord& w) {
  Word out;
  for (const auto& l : w.letters) out.push_back({VertexId(l.gen), l.exp});
  return out;
}

namespace {

Permutation identity(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation delta(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(n - 1 - i);
  return p;
}

Permutation product(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out[p] = a[b[p]];
  return out;
}

Permutation generator(int n, int i) {
  Permutation p = identity(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

// Conjugation by Delta.
Permutation flip(const Permutation& a) {
  const std::size_t n = a.size();
  Permutation out(n);
  for (std::size_t p = 0; p < n; ++p) out[p] = static_cast<std::uint8_t>(n - 1 - a[n - 1 - p]);
  return out;
}

// s_i is a left divisor of A.
bool starts_with(const Permutation& a, int i) {
  // Value i-1 sits to the right of value i.
  std::size_t pos_lo = 0;
  std::size_t pos_hi = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] == i - 1) pos_lo = p;
    if (a[p] == i) pos_hi = p;
  }
  return pos_lo > pos_hi;
}

// s_i is a right divisor of A.
bool ends_with(const Permutation& a, int i) { return a[i - 1] > a[i]; }

// Moves simple prefixes of b onto a until S(b) is contained in F(a).
// Returns true when a changed.
bool left_weight(Permutation& a, Permutation& b) {
  const int n = static_cast<int>(a.size());
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(b, i) && !ends_with(a, i)) {
        std::swap(a[i - 1], a[i]);  // a * s_i
        for (auto& v : b) {         // s_i * b
          if (v == i - 1)
            v = static_cast<std::uint8_t>(i);
          else if (v == i)
            v = static_cast<std::uint8_t>(i - 1);
        }
        changed = again = true;
      }
    }
  }
  return changed;
}

}  // namespace

BraidNormalForm normal_form(const BraidWord& w) {
  w.check();
  if (w.letters.size() > budgets().oracle_letters)
    throw BudgetExceeded("braid word of " + std::to_string(w.letters.size()) +
                         " letters exceeds the oracle budget of " +
                         std::to_string(budgets().oracle_letters));
  const int n = w.strands;
  const Permutation id = identity(n);
  const Permutation full = delta(n);

  // s_i^-1 = (s_i^-1 Delta) Delta^-1; gathering every Delta^-1 at the front
  // flips each factor once per inverse letter at or after it.
  int inverses = 0;
  for (const auto& l : w.letters) inverses += l.exp < 0 ? 1 : 0;

  BraidNormalForm out;
  out.strands = n;
  out.power = -inverses;
  std::vector<Permutation>& factors = out.factors;
  int remaining = inverses;
  for (const auto& l : w.letters) {
    Permutation simple = l.exp > 0 ? generator(n, l.gen) : product(generator(n, l.gen), full);
    if (remaining % 2 == 1) simple = flip(simple);
    if (l.exp < 0) --remaining;

    factors.push_back(std::move(simple));
    for (std::size_t k = factors.size() - 1; k > 0; --k) {
      if (!left_weight(factors[k - 1], factors[k])) break;
    }
    while (!factors.empty() && factors.back() == id) factors.pop_back();
  }

  std::size_t leading = 0;
  while (leading < factors.size() && factors[leading] == full) ++leading;
  out.power += static_cast<int>(leading);
  factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(leading));
  return out;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw InvalidArgument("comparing braids on different strand counts");
  return normal_form(a) == normal_form(b);
}

namespace {

void append_simple(BraidWord& out, Permutation a) {
  const int n = static_cast<int>(a.size());
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(a, i)) {
        out.letters.push_back({i, 1});
        for (auto& v : a) {
          if (v == i - 1)
            v = static_cast<std::uint8_t>(i);
          else if (v == i)
            v = static_cast<std::uint8_t>(i - 1);
        }
        found = true;
        break;
      }
    }
  }
}

}  // namespace

BraidWord to_braid_word(const BraidNormalForm& nf) {
  BraidWord out{nf.strands, {}};
  BraidWord full{nf.strands, {}};
  append_simple(full, delta(nf.strands));
  const BraidWord step = nf.power >= 0 ? full : full.inverse();
  for (int k = 0; k < std::abs(nf.power); ++k) out = out * step;
  for (const auto& f : nf.factors) append_simple(out, f);
  return out;
}

std::vector<int> permutation_image(const BraidWord& w) {
  w.check();
  Permutation p = identity(w.strands);
  for (const auto& l : w.letters) p = product(p, generator(w.strands, l.gen));
  std::vector<int> out;
  for (auto v : p) out.push_back(v + 1);
  return out;
}

}  // namespace angulate
