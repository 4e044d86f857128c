#include "glued/finite_pv.hpp"

#include <map>

#include "glued/error.hpp"
#include "glued/pv.hpp"

namespace glued
{

FiniteUnion::FiniteUnion(GroupHandle g, GroupHandle h)
  : _g(std::move(g)), _h(std::move(h))
{
  if (!_g->is_finite() || !_h->is_finite())
    throw RegimeError("finite backend needs two finite groups");
  _points.push_back(Point::base());
  for (auto const &x : _g->elements())
    if (!_g->is_identity(x))
      _points.push_back(Point::unchecked(Side::g, x));
  for (auto const &y : _h->elements())
    if (!_h->is_identity(y))
      _points.push_back(Point::unchecked(Side::h, y));
  for (std::size_t i = 0; i < _points.size(); ++i)
    _index.emplace(_points[i], static_cast<std::uint32_t>(i));
}

std::uint32_t FiniteUnion::index_of(Point const &p) const
{
  auto it = _index.find(p);
  if (it == _index.end())
    throw PreconditionError("point is not in the finite pointed union");
  return it->second;
}

DensePerm FiniteUnion::translation(Side side, Element const &x) const
{
  auto const &grp = side == Side::g ? *_g : *_h;
  std::vector<std::uint32_t> images(_points.size());
  for (std::size_t i = 0; i < _points.size(); ++i)
    images[i] = index_of(apply_factor(side, grp, x, _points[i]));
  return DensePerm(std::move(images));
}

std::string describe(FiniteClass cls, std::size_t degree)
{
  return (cls == FiniteClass::symmetric ? "Sym(" : "Alt(") +
         std::to_string(degree) + ")";
}

std::vector<DensePerm>
realize_finite(FiniteUnion const &u,
               std::optional<std::vector<Element>> const &g_generators,
               std::optional<std::vector<Element>> const &h_generators)
{
  std::vector<DensePerm> gens;
  auto add = [&](Side side, Group const &grp,
                 std::optional<std::vector<Element>> const &chosen) {
    auto xs = chosen ? *chosen : grp.elements();
    for (auto const &x : xs) {
      if (!grp.contains(x))
        throw PreconditionError("generator is not an element of " + grp.name());
      if (!grp.is_identity(x))
        gens.push_back(u.translation(side, x));
    }
  };
  add(Side::g, u.g(), g_generators);
  add(Side::h, u.h(), h_generators);
  return gens;
}

std::vector<DensePerm> realize_finite(GroupHandle const &g,
                                      GroupHandle const &h,
                                      std::size_t degree_cap)
{
  if (!g->is_finite() || !h->is_finite())
    throw RegimeError("finite backend needs two finite groups");
  auto degree = *g->order() + *h->order() - 1;
  if (degree > degree_cap)
    throw BudgetError("pointed union has " + std::to_string(degree) +
                      " points, above cap " + std::to_string(degree_cap));
  return realize_finite(FiniteUnion(g, h));
}

DensePerm regular_translation(Group const &group, Element const &x)
{
  auto elts = group.elements();
  std::map<Element, std::uint32_t> index;
  for (std::size_t i = 0; i < elts.size(); ++i)
    index.emplace(elts[i], static_cast<std::uint32_t>(i));
  std::vector<std::uint32_t> images(elts.size());
  for (std::size_t i = 0; i < elts.size(); ++i)
    images[i] = index.at(group.multiply(x, elts[i]));
  return DensePerm(std::move(images));
}

int translation_sign(Group const &group, Element const &x)
{
  auto n = group.order();
  if (!n)
    throw RegimeError("translation sign needs a finite group");
  auto k = group.element_order(x).value();
  auto exponent = (*n / k) * (k - 1);
  return exponent % 2 == 0 ? 1 : -1;
}

FiniteClass classify(Group const &g, Group const &h)
{
  if (!g.is_finite() || !h.is_finite())
    throw RegimeError("classification needs two finite groups");
  if (*g.order() < 2 || *h.order() < 2)
    throw PreconditionError("classification needs nontrivial factors");
  return has_cyclic_two_sylow(g) || has_cyclic_two_sylow(h)
           ? FiniteClass::symmetric
           : FiniteClass::alternating;
}

Verification verify_classification(GroupHandle const &g, GroupHandle const &h,
                                   std::size_t degree_cap)
{
  auto cls = classify(*g, *h);
  auto gens = realize_finite(g, h, degree_cap);
  auto degree = *g->order() + *h->order() - 1;
  Verification v{cls, degree, schreier_sims_order(gens, degree_cap),
                 factorial(static_cast<unsigned>(degree)), false};
  if (cls == FiniteClass::alternating)
    v.expected /= 2;
  v.ok = v.order == v.expected;
  return v;
}

} // namespace glued
