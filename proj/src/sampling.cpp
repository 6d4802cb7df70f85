#include "ends/sampling.hpp"

#include <algorithm>

namespace ends {

Element random_element(const GroupPtr& g, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, g->ball_generators().size() - 1);
  Element x = g->identity();
  for (int i = len(rng); i > 0; --i) x = g->multiply(g->ball_generators()[pick(rng)], x);
  return x;
}

std::vector<Element> random_elements(const GroupPtr& g, std::mt19937_64& rng, int count, int max_len) {
  std::vector<Element> out;
  for (int i = 0; i < count; ++i) out.push_back(random_element(g, rng, max_len));
  return out;
}

SubsetPtr random_commensurated(const GroupPtr& g, std::mt19937_64& rng, bool with_identity) {
  SubsetPtr base;
  switch (g->kind()) {
    case GroupKind::Free:
    case GroupKind::FreeProduct:
      base = suffix_cone(g, random_element(g, rng, 3));
      break;
    case GroupKind::FreeAbelian: {
      if (as<FreeAbelianGroup>(*g).rank() != 1) throw DomainError("no random commensurated family for " + g->spec());
      std::uniform_int_distribution<long> threshold(-3, 3);
      base = half_space(g, {rng() % 2 ? 1L : -1L}, threshold(rng));
      break;
    }
    default:
      throw DomainError("no random commensurated family for " + g->spec());
  }
  std::vector<Element> add = random_elements(g, rng, 2, 3);
  if (with_identity) add.push_back(g->identity());
  std::sort(add.begin(), add.end());
  add.erase(std::unique(add.begin(), add.end()), add.end());
  std::vector<Element> remove;
  for (const auto& x : random_elements(g, rng, 2, 3)) {
    if (std::find(add.begin(), add.end(), x) == add.end() && std::find(remove.begin(), remove.end(), x) == remove.end()) {
      remove.push_back(x);
    }
  }
  return edited(base, add, remove);
}

}  // namespace ends
