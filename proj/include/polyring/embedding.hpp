#pragma once

#include <vector>

#include "polyring/ring.hpp"

namespace polyring {

/// A validated injective ring homomorphism small -> big (an inclusion A ⊆ B).
class Embedding {
 public:
  const FiniteRing& small() const noexcept { return small_; }
  const FiniteRing& big() const noexcept { return big_; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  Elem operator()(Elem a) const { return map_.at(a); }

  friend Embedding embed(const FiniteRing& a, const FiniteRing& b, std::vector<Elem> map);

 private:
  Embedding(FiniteRing a, FiniteRing b, std::vector<Elem> map)
      : small_(std::move(a)), big_(std::move(b)), map_(std::move(map)) {}

  FiniteRing small_;
  FiniteRing big_;
  std::vector<Elem> map_;
};

/// Checks that map is total, injective and preserves zero, sums, products and
/// (when both rings have one) unity.
inline Embedding embed(const FiniteRing& a, const FiniteRing& b, std::vector<Elem> map) {
  if (map.size() != a.order())
    throw Error(ErrorKind::invalid_parameter,
                "embedding map has " + std::to_string(map.size()) + " entries, expected " +
                    std::to_string(a.order()));
  std::vector<bool> hit(b.order(), false);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!b.contains(map[i]))
      throw Error(ErrorKind::invalid_parameter, "image " + std::to_string(map[i]) + " is not in " + b.label());
    if (hit[map[i]])
      throw Error(ErrorKind::not_injective, "two elements map to " + std::to_string(map[i]));
    hit[map[i]] = true;
  }
  if (map[FiniteRing::zero()] != FiniteRing::zero())
    throw Error(ErrorKind::not_homomorphic, "zero does not map to zero");
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y) {
      if (map[a.add(x, y)] != b.add(map[x], map[y]))
        throw Error(ErrorKind::not_homomorphic,
                    "sum of (" + std::to_string(x) + ", " + std::to_string(y) + ") not preserved");
      if (map[a.mul(x, y)] != b.mul(map[x], map[y]))
        throw Error(ErrorKind::not_homomorphic,
                    "product of (" + std::to_string(x) + ", " + std::to_string(y) + ") not preserved");
    }
  if (a.is_unital() && b.is_unital() && map[*a.unity()] != *b.unity())
    throw Error(ErrorKind::not_homomorphic, "unity does not map to unity");
  return Embedding(a, b, std::move(map));
}

inline Embedding identity_embedding(const FiniteRing& r) {
  std::vector<Elem> map(r.order());
  for (Elem i = 0; i < r.order(); ++i) map[i] = i;
  return embed(r, r, std::move(map));
}

}  // namespace polyring
