#include "glued/schreier_sims.hpp"

#include "glued/error.hpp"

namespace glued
{

namespace
{

std::optional<std::uint32_t> first_moved_point(DensePerm const &p)
{
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p[i] != i)
      return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

} // namespace

StabilizerChain::StabilizerChain(std::vector<DensePerm> const &generators,
                                 std::size_t degree)
  : _degree(degree)
{
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw PreconditionError("generator degree " + std::to_string(g.degree()) +
                              " differs from " + std::to_string(degree));

  // Initial base: extend until no generator fixes every base point.
  for (auto const &g : generators) {
    if (g.is_identity())
      continue;
    bool fixes_base = true;
    for (auto const &level : _levels)
      if (g[level.base_point] != level.base_point)
        fixes_base = false;
    if (fixes_base)
      add_level(*first_moved_point(g));
  }
  for (auto const &g : generators) {
    if (g.is_identity())
      continue;
    for (auto &level : _levels) {
      level.generators.push_back(g);
      if (g[level.base_point] != level.base_point)
        break;
    }
  }
  for (auto &level : _levels)
    update_orbit(level);

  // Test Schreier generators bottom-up; a failing one is added to every
  // level it reaches and the scan resumes there.
  auto i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    auto &level = _levels[static_cast<std::size_t>(i)];

    for (std::size_t oi = 0; !extended && oi < level.orbit.size(); ++oi) {
      for (std::size_t si = 0; !extended && si < level.generators.size(); ++si) {
        if (level.tested[oi][si])
          continue;
        level.tested[oi][si] = true;

        auto b = level.orbit[oi];
        auto const &s = level.generators[si];
        auto const &ub = *level.transversal[b];
        auto const &usb = *level.transversal[s[b]];
        auto schreier = compose(usb.inverse(), compose(s, ub));

        auto [residue, stop] = sift(std::move(schreier),
                                    static_cast<std::size_t>(i) + 1);
        if (residue.is_identity())
          continue;

        if (stop == _levels.size())
          add_level(*first_moved_point(residue));
        // `level` may dangle after add_level; index from here on.
        for (auto l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          _levels[l].generators.push_back(residue);
          update_orbit(_levels[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
      }
    }
    if (!extended)
      --i;
  }
}

void StabilizerChain::add_level(std::uint32_t base_point)
{
  Level level;
  level.base_point = base_point;
  level.transversal.resize(_degree);
  _levels.push_back(std::move(level));
}

void StabilizerChain::update_orbit(Level &level) const
{
  if (level.orbit.empty()) {
    level.orbit.push_back(level.base_point);
    level.transversal[level.base_point] = DensePerm::identity(_degree);
  }
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    auto b = level.orbit[k];
    for (auto const &s : level.generators) {
      auto c = s[b];
      if (!level.transversal[c]) {
        level.transversal[c] = compose(s, *level.transversal[b]);
        level.orbit.push_back(c);
      }
    }
  }
  level.tested.resize(level.orbit.size());
  for (auto &row : level.tested)
    row.resize(level.generators.size(), false);
}

std::pair<DensePerm, std::size_t>
StabilizerChain::sift(DensePerm perm, std::size_t from) const
{
  for (auto l = from; l < _levels.size(); ++l) {
    auto const &level = _levels[l];
    auto x = perm[level.base_point];
    if (!level.transversal[x])
      return {std::move(perm), l};
    perm = compose(level.transversal[x]->inverse(), perm);
  }
  return {std::move(perm), _levels.size()};
}

BigInt StabilizerChain::order() const
{
  BigInt n = 1;
  for (auto const &level : _levels)
    n *= level.orbit.size();
  return n;
}

bool StabilizerChain::contains(DensePerm const &perm) const
{
  if (perm.degree() != _degree)
    return false;
  auto [residue, stop] = sift(perm, 0);
  return stop == _levels.size() && residue.is_identity();
}

std::vector<std::uint32_t> StabilizerChain::base() const
{
  std::vector<std::uint32_t> b;
  for (auto const &level : _levels)
    b.push_back(level.base_point);
  return b;
}

BigInt schreier_sims_order(std::vector<DensePerm> const &generators,
                           std::size_t degree_cap)
{
  if (generators.empty())
    return 1;
  auto degree = generators.front().degree();
  if (degree > degree_cap)
    throw BudgetError("permutation degree " + std::to_string(degree) +
                      " exceeds cap " + std::to_string(degree_cap));
  return StabilizerChain(generators, degree).order();
}

BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k)
    r *= k;
  return r;
}

} // namespace glued
