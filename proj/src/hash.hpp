#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace polyrec {

inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct PairHash {
  template <class A, class B>
  std::size_t operator()(const std::pair<A, B>& p) const {
    return hash_mix(std::hash<A>{}(p.first), std::hash<B>{}(p.second));
  }
};

struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::size_t seed = v.size();
    for (const auto& x : v) seed = hash_mix(seed, std::hash<T>{}(x));
    return seed;
  }
};

}  // namespace polyrec
