#include "glued/naturality.hpp"

#include <set>

#include "glued/error.hpp"

namespace glued
{

GroupMorphism scaling_embedding(GroupHandle const &group, std::int64_t factor)
{
  if (factor == 0)
    throw PreconditionError("scaling by zero is not injective");
  if (group->kind() != GroupKind::integers && group->kind() != GroupKind::lattice)
    throw PreconditionError("scaling embeddings need Z or Z^d");

  GroupMorphism m;
  m.source = group;
  m.target = group;
  m.map = [factor](Element const &x) {
    Element::Storage r(x.storage());
    for (auto &c : r)
      c *= factor;
    return Element(std::move(r));
  };
  m.preimage = [factor](Element const &x) -> std::optional<Element> {
    Element::Storage r(x.storage());
    for (auto &c : r) {
      if (c % factor != 0)
        return std::nullopt;
      c /= factor;
    }
    return Element(std::move(r));
  };
  return m;
}

GroupMorphism free_substitution(GroupHandle const &source,
                                GroupHandle const &target,
                                std::vector<Element> images)
{
  if (source->kind() != GroupKind::free)
    throw PreconditionError("substitution needs a free source group");
  for (auto const &y : images)
    if (!target->contains(y))
      throw PreconditionError("substitution image is not in the target");

  GroupMorphism m;
  m.source = source;
  m.target = target;
  m.map = [images = std::move(images), target](Element const &x) {
    Element r = target->identity();
    for (auto letter : x.coords()) {
      auto const &img = images.at(static_cast<std::size_t>(
        (letter > 0 ? letter : -letter) - 1));
      r = target->multiply(r, letter > 0 ? img : target->inverse(img));
    }
    return r;
  };
  return m;
}

void verify_embedding(GroupMorphism const &iota, std::mt19937_64 &rng,
                      std::int64_t radius, unsigned samples)
{
  auto const &K = *iota.source;
  auto const &G = *iota.target;
  if (iota(K.identity()) != G.identity())
    throw PreconditionError("embedding does not preserve the identity");
  for (unsigned i = 0; i < samples; ++i) {
    auto x = K.random(rng, radius);
    auto y = K.random(rng, radius);
    if (iota(K.multiply(x, y)) != G.multiply(iota(x), iota(y)))
      throw PreconditionError("map is not a homomorphism on (" + K.format(x) +
                              ", " + K.format(y) + ")");
  }
  std::set<Element> images;
  for (auto const &x : K.ball(radius))
    if (!images.insert(iota(x)).second)
      throw PreconditionError("map is not injective on the ball of radius " +
                              std::to_string(radius));
}

namespace
{

Point map_point(Point const &p, GroupMorphism const &iota_g,
                GroupMorphism const &iota_h)
{
  switch (p.side()) {
  case Side::base:
    return p;
  case Side::g:
    return Point::on(Side::g, *iota_g.target, iota_g(p.payload()));
  case Side::h:
    return Point::on(Side::h, *iota_h.target, iota_h(p.payload()));
  }
  return p;
}

} // namespace

PvElement embed(PvContext const &small, PvContext const &large,
                PvElement const &sigma, GroupMorphism const &iota_g,
                GroupMorphism const &iota_h)
{
  if (small.g().is_finite() || small.h().is_finite())
    throw RegimeError("embedding K*L into G*H needs K and L infinite");
  if (large.regime() != Regime::both_infinite)
    throw RegimeError("target of the embedding must have infinite factors");

  return {iota_g(sigma.g), iota_h(sigma.h),
          sigma.residual.relabel(
            [&](Point const &p) { return map_point(p, iota_g, iota_h); })};
}

std::optional<PvElement> restrict_to(PvContext const &large,
                                     PvContext const &small,
                                     PvElement const &sigma,
                                     GroupMorphism const &iota_g,
                                     GroupMorphism const &iota_h)
{
  if (!iota_g.preimage || !iota_h.preimage)
    throw PreconditionError("restriction needs preimage maps");
  if (large.regime() != Regime::both_infinite ||
      small.regime() != Regime::both_infinite)
    throw RegimeError("restriction needs infinite factors on both sides");

  auto g = iota_g.preimage(sigma.g);
  auto h = iota_h.preimage(sigma.h);
  if (!g || !h)
    return std::nullopt;

  auto pull = [&](Point const &p) -> std::optional<Point> {
    if (p.is_base())
      return p;
    auto const &iota = p.side() == Side::g ? iota_g : iota_h;
    auto x = iota.preimage(p.payload());
    if (!x)
      return std::nullopt;
    return Point::on(p.side(), *iota.source, *x);
  };

  FinPerm::Mapping pairs;
  for (auto const &[from, to] : sigma.residual.mapping()) {
    auto a = pull(from);
    auto b = pull(to);
    if (!a && !b)
      continue; // moved entirely outside the subset: not our business
    if (!a || !b)
      return std::nullopt;
    pairs.emplace_back(std::move(*a), std::move(*b));
  }
  return PvElement{*g, *h, FinPerm::from_mapping(std::move(pairs))};
}

} // namespace glued
