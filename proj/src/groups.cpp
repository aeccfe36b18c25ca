#include "porthos/groups.hpp"

#include <algorithm>
#include <unordered_map>

namespace porthos {

FreeWord reduce(FreeWord w) {
  std::vector<std::pair<int, int>> stack;
  for (const auto& letter : w.letters) {
    if (letter.second != 1 && letter.second != -1)
      throw std::invalid_argument("FreeWord: exponent must be +-1");
    if (!stack.empty() && stack.back().first == letter.first &&
        stack.back().second == -letter.second)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return FreeWord{std::move(stack)};
}

FreeWord free_multiply(const FreeWord& a, const FreeWord& b) {
  FreeWord c = a;
  c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
  return reduce(std::move(c));
}

FreeWord free_inverse(const FreeWord& a) {
  FreeWord r;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    r.letters.emplace_back(it->first, -it->second);
  return r;
}

GroupElement GroupElement::integer(long long v) {
  GroupElement g;
  g.v_ = v;
  return g;
}

GroupElement GroupElement::mod(long long v, long long modulus) {
  if (modulus < 1) throw std::invalid_argument("GroupElement::mod: modulus must be positive");
  GroupElement g;
  g.v_ = ModValue{((v % modulus) + modulus) % modulus, modulus};
  return g;
}

GroupElement GroupElement::word(FreeWord w) {
  GroupElement g;
  g.v_ = reduce(std::move(w));
  return g;
}

GroupElement GroupElement::generator(int index) {
  return word(FreeWord{{{index, 1}}});
}

GroupElement GroupElement::inverse() const {
  if (is_integer()) return integer(-integer_value());
  if (is_mod()) return mod(-mod_value().value, mod_value().modulus);
  return word(free_inverse(word_value()));
}

bool GroupElement::is_identity() const {
  if (is_integer()) return integer_value() == 0;
  if (is_mod()) return mod_value().value == 0;
  return word_value().letters.empty();
}

std::string GroupElement::key() const {
  if (is_integer()) return "z:" + std::to_string(integer_value());
  if (is_mod()) return "m:" + std::to_string(mod_value().value);
  std::string k = "f:";
  for (const auto& [g, e] : word_value().letters)
    k += std::to_string(g) + (e > 0 ? "+" : "-");
  return k;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.is_integer() && b.is_integer())
    return GroupElement::integer(a.integer_value() + b.integer_value());
  if (a.is_mod() && b.is_mod()) {
    if (a.mod_value().modulus != b.mod_value().modulus)
      throw std::invalid_argument("GroupElement: modulus mismatch");
    return GroupElement::mod(a.mod_value().value + b.mod_value().value, a.mod_value().modulus);
  }
  if (a.is_word() && b.is_word())
    return GroupElement::word(free_multiply(a.word_value(), b.word_value()));
  throw std::invalid_argument("GroupElement: mixed group variants");
}

GroupElement alternating_product(const std::vector<GroupElement>& ts, const StarPattern& pattern) {
  if (static_cast<int>(ts.size()) != pattern.length())
    throw std::invalid_argument("alternating_product: length mismatch");
  if (ts.empty()) throw std::invalid_argument("alternating_product: empty product");
  GroupElement acc = pattern.flagged(0) ? ts[0].inverse() : ts[0];
  for (std::size_t k = 1; k < ts.size(); ++k)
    acc = acc * (pattern.flagged(static_cast<int>(k)) ? ts[k].inverse() : ts[k]);
  return acc;
}

namespace {

// ordered tuples of distinct positions, lexicographic; calls visit(g) until it
// returns false
template <typename Visit>
void for_each_distinct_tuple(int m, int p, Visit&& visit) {
  std::vector<int> g(static_cast<std::size_t>(p), 0);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  int k = 0;
  g[0] = -1;
  while (k >= 0) {
    int next = g[static_cast<std::size_t>(k)];
    if (next >= 0) used[static_cast<std::size_t>(next)] = false;
    ++next;
    while (next < m && used[static_cast<std::size_t>(next)]) ++next;
    if (next >= m) {
      --k;
      continue;
    }
    g[static_cast<std::size_t>(k)] = next;
    used[static_cast<std::size_t>(next)] = true;
    if (k == p - 1) {
      if (!visit(g)) return;
    } else {
      ++k;
      g[static_cast<std::size_t>(k)] = -1;
    }
  }
}

}  // namespace

DissociateResult is_p_dissociate(const std::vector<GroupElement>& set, int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("is_p_dissociate: p must be even >= 2");
  const int m = static_cast<int>(set.size());
  DissociateResult out;
  if (m < p) {
    out.dissociate = true;  // vacuous
    return out;
  }
  if (falling(static_cast<unsigned>(m), static_cast<unsigned>(p)) > BigInt(10'000'000))
    throw size_error("is_p_dissociate: enumeration guard exceeded");
  const StarPattern pattern = StarPattern::alternating(p);
  out.dissociate = true;
  for_each_distinct_tuple(m, p, [&](const std::vector<int>& g) {
    std::vector<GroupElement> tuple;
    tuple.reserve(g.size());
    for (int v : g) tuple.push_back(set[static_cast<std::size_t>(v)]);
    if (alternating_product(tuple, pattern).is_identity()) {
      out.dissociate = false;
      out.witness = std::move(tuple);
      return false;
    }
    return true;
  });
  return out;
}

bool family_dissociate(const std::vector<std::vector<GroupElement>>& blocks, int p) {
  if (blocks.empty()) throw std::invalid_argument("family_dissociate: no blocks");
  // disjointness across blocks
  std::vector<std::string> keys;
  for (const auto& block : blocks)
    for (const auto& e : block) keys.push_back(e.key());
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw std::invalid_argument("family_dissociate: overlapping blocks");

  const int nb = static_cast<int>(blocks.size());
  BigInt transversals = 1;
  for (const auto& block : blocks) transversals *= static_cast<unsigned>(block.size());
  const BigInt work = transversals * falling(static_cast<unsigned>(nb), static_cast<unsigned>(std::min(nb, p)));
  if (work > BigInt(10'000'000)) throw size_error("family_dissociate: enumeration guard exceeded");

  std::vector<std::size_t> pick(static_cast<std::size_t>(nb), 0);
  while (true) {
    std::vector<GroupElement> transversal;
    for (int i = 0; i < nb; ++i)
      transversal.push_back(blocks[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
    if (!is_p_dissociate(transversal, p).dissociate) return false;
    int k = nb - 1;
    while (k >= 0 && ++pick[static_cast<std::size_t>(k)] == blocks[static_cast<std::size_t>(k)].size()) {
      pick[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return true;
}

NqResult count_Nq(const std::vector<GroupElement>& set, int q) {
  if (q < 1) throw std::invalid_argument("count_Nq: q must be positive");
  const int m = static_cast<int>(set.size());
  NqResult out;
  if (m < q) return out;  // no tuples
  BigInt work = 1;
  for (int k = 0; k < q; ++k) work *= static_cast<unsigned>(m);
  if (work > BigInt(10'000'000)) throw size_error("count_Nq: enumeration guard exceeded");

  const StarPattern pattern = StarPattern::alternating(q);
  std::unordered_map<std::string, std::pair<std::uint64_t, GroupElement>> mult;
  for_each_distinct_tuple(m, q, [&](const std::vector<int>& g) {
    std::vector<GroupElement> tuple;
    tuple.reserve(g.size());
    for (int v : g) tuple.push_back(set[static_cast<std::size_t>(v)]);
    GroupElement t = alternating_product(tuple, pattern);
    auto [it, inserted] = mult.try_emplace(t.key(), 0, t);
    ++it->second.first;
    return true;
  });
  for (const auto& [key, entry] : mult) {
    if (entry.first > out.n_q ||
        (entry.first == out.n_q && out.argmax_t && key < out.argmax_t->key())) {
      out.n_q = entry.first;
      out.argmax_t = entry.second;
    }
  }
  return out;
}

}  // namespace porthos
