#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "group.hpp"
#include "pv.hpp"

namespace glued
{

// An injective homomorphism between factor groups. `preimage` is optional
// and, when present, inverts `map` on its image.
struct GroupMorphism
{
  GroupHandle source;
  GroupHandle target;
  std::function<Element(Element const &)> map;
  std::function<std::optional<Element>(Element const &)> preimage;

  Element operator()(Element const &x) const { return map(x); }
};

/// k -> c k on Z, or componentwise scaling on Z^d.
GroupMorphism scaling_embedding(GroupHandle const &group, std::int64_t factor);

/// Free group homomorphism sending generator i to images[i].
GroupMorphism free_substitution(GroupHandle const &source,
                                GroupHandle const &target,
                                std::vector<Element> images);

/// Checks the homomorphism law on `samples` random pairs of length <=
/// `radius` and injectivity on the whole ball of that radius. Throws
/// PreconditionError on the first violation.
void verify_embedding(GroupMorphism const &iota, std::mt19937_64 &rng,
                      std::int64_t radius = 3, unsigned samples = 200);

/// Image of `sigma` under the embedding K*L -> G*H extending the factor
/// embeddings (both K and L infinite).
PvElement embed(PvContext const &small, PvContext const &large,
                PvElement const &sigma, GroupMorphism const &iota_g,
                GroupMorphism const &iota_h);

/// Restriction of an element of <iota(K), iota(L)> to the image of the
/// pointed union of K and L. Needs preimage maps; returns nullopt when
/// sigma does not preserve that subset.
std::optional<PvElement> restrict_to(PvContext const &large,
                                     PvContext const &small,
                                     PvElement const &sigma,
                                     GroupMorphism const &iota_g,
                                     GroupMorphism const &iota_h);

} // namespace glued
