#pragma once

// Breadth-first closure of a generating set under right multiplication.

#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "stdual/errors.hpp"

namespace stdual::detail {

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

template <class Elem>
struct Closure {
  std::vector<Elem> elements;   // element 0 is the identity
  std::vector<int> parent;      // elements[k] = elements[parent[k]] * gens[via[k]]
  std::vector<int> via;
  std::vector<int> right;       // right[e * ngens + g]
  std::vector<std::string> labels;

  // Flat composition table, derived from the right-multiplication table.
  std::vector<int> table(std::size_t ngens) const {
    const std::size_t n = elements.size();
    std::vector<int> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      t[a * n] = static_cast<int>(a);
      for (std::size_t b = 1; b < n; ++b) {
        int left = t[a * n + static_cast<std::size_t>(parent[b])];
        t[a * n + b] = right[static_cast<std::size_t>(left) * ngens + static_cast<std::size_t>(via[b])];
      }
    }
    return t;
  }
};

template <class Elem, class Mul, class KeyOf>
Closure<Elem> close_under(const std::vector<Elem>& gens, const Elem& id, Mul mul, KeyOf key_of, std::size_t cap,
                          const std::string& letter) {
  using Key = std::decay_t<decltype(key_of(id))>;
  using Hash = std::conditional_t<std::is_same_v<Key, std::vector<int>>, IntVecHash, std::hash<Key>>;
  std::unordered_map<Key, int, Hash> index;
  Closure<Elem> c;
  c.elements.push_back(id);
  c.parent.push_back(-1);
  c.via.push_back(-1);
  c.labels.push_back("1");
  index.emplace(key_of(id), 0);
  const std::size_t ng = gens.size();
  for (std::size_t e = 0; e < c.elements.size(); ++e) {
    for (std::size_t g = 0; g < ng; ++g) {
      Elem prod = mul(c.elements[e], gens[g]);
      auto key = key_of(prod);
      auto it = index.find(key);
      int k;
      if (it == index.end()) {
        if (c.elements.size() >= cap) throw ResourceLimit("group closure exceeds size bound " + std::to_string(cap));
        k = static_cast<int>(c.elements.size());
        index.emplace(std::move(key), k);
        c.elements.push_back(std::move(prod));
        c.parent.push_back(static_cast<int>(e));
        c.via.push_back(static_cast<int>(g));
        c.labels.push_back((e == 0 ? std::string() : c.labels[e] + ".") + letter + std::to_string(g + 1));
      } else {
        k = it->second;
      }
      c.right.push_back(k);
    }
  }
  return c;
}

}  // namespace stdual::detail
