#include "glued/pv.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "glued/error.hpp"

namespace glued
{

namespace
{

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

} // namespace

std::string to_string(Regime r)
{
  switch (r) {
  case Regime::both_infinite:
    return "both-infinite";
  case Regime::mixed:
    return "mixed";
  case Regime::both_finite:
    return "both-finite";
  }
  return "?";
}

std::string PvOrder::str() const
{
  switch (kind) {
  case Kind::finite:
    return std::to_string(value);
  case Kind::infinite:
    return "infinite";
  case Kind::exceeds_cap:
    return "exceeds cap";
  }
  return "?";
}

bool has_cyclic_two_sylow(Group const &group)
{
  auto n = group.order();
  if (!n)
    throw RegimeError("2-Sylow criterion needs a finite group");
  if (*n % 2 != 0)
    return false;
  auto full = two_valuation(*n);
  for (auto const &x : group.elements()) {
    auto k = group.element_order(x).value();
    if (k % 2 == 0 && two_valuation(k) == full)
      return true;
  }
  return false;
}

PvContext::PvContext(GroupHandle g, GroupHandle h, PvOptions options)
  : _g(std::move(g)), _h(std::move(h)), _options(options), _fmt{_g, _h}
{
  bool g_inf = !_g->is_finite();
  bool h_inf = !_h->is_finite();
  if (g_inf && h_inf) {
    _regime = Regime::both_infinite;
  } else if (g_inf) {
    _regime = Regime::mixed;
    _odd_residual_allowed = has_cyclic_two_sylow(*_h);
  } else if (h_inf) {
    throw RegimeError("mixed regime expects the infinite factor on the left; "
                      "swap " + _g->name() + " and " + _h->name());
  } else {
    throw RegimeError("both factors are finite (" + _g->name() + ", " +
                      _h->name() + "); use the dense finite backend");
  }
}

void PvContext::require_regime(Regime r, char const *op) const
{
  if (_regime != r)
    throw RegimeError(std::string(op) + " requires the " + to_string(r) +
                      " regime, context is " + to_string(_regime));
}

PvElement PvContext::identity() const
{ return {_g->identity(), _h->identity(), FinPerm::identity()}; }

PvElement PvContext::from_g(Element x) const
{
  if (!_g->contains(x))
    throw PreconditionError("not an element of " + _g->name());
  return {std::move(x), _h->identity(), FinPerm::identity()};
}

PvElement PvContext::from_h(Element y) const
{
  if (!_h->contains(y))
    throw PreconditionError("not an element of " + _h->name());
  if (_regime == Regime::both_infinite)
    return {_g->identity(), std::move(y), FinPerm::identity()};

  // Finite H: its left translation is a finitely supported permutation.
  FinPerm::Mapping pairs;
  for (auto const &z : _h->elements())
    pairs.emplace_back(Point::on(Side::h, *_h, z),
                       Point::on(Side::h, *_h, _h->multiply(y, z)));
  return {_g->identity(), _h->identity(),
          FinPerm::from_mapping(std::move(pairs))};
}

PvElement PvContext::from_perm(FinPerm a) const
{
  for (auto const &p : a.support()) {
    if (p.is_base())
      continue;
    auto const &grp = p.side() == Side::g ? *_g : *_h;
    if (!grp.contains(p.payload()) || grp.is_identity(p.payload()))
      throw PreconditionError("permutation moves an invalid point");
  }
  if (a.parity() == Parity::odd) {
    if (_regime == Regime::both_infinite)
      throw PreconditionError(
        "odd finitary permutation is not an element of the glued product "
        "of two infinite groups");
    if (_options.strict_membership && !_odd_residual_allowed)
      throw PreconditionError(
        "odd finitary permutation is not an element of the glued product: " +
        _h->name() + " has no nontrivial cyclic 2-Sylow");
  }
  return {_g->identity(), _h->identity(), std::move(a)};
}

PvElement PvContext::from_letter(Letter const &letter) const
{
  if (auto const *gl = std::get_if<GLetter>(&letter))
    return from_g(gl->x);
  if (auto const *hl = std::get_if<HLetter>(&letter))
    return from_h(hl->y);
  return from_perm(std::get<FinPerm>(letter));
}

Point PvContext::act(PvElement const &sigma, Point const &p) const
{
  return apply_factor(Side::g, *_g, sigma.g,
                      apply_factor(Side::h, *_h, sigma.h, sigma.residual(p)));
}

PvElement PvContext::multiply_unchecked(PvElement const &s1,
                                        PvElement const &s2) const
{
  auto const &G = *_g;
  auto const &H = *_h;
  Element g2_inv = G.inverse(s2.g);

  if (_regime == Regime::mixed) {
    // g1 a1 g2 a2 = (g1 g2) (g2^-1 a1 g2) a2
    auto conj = s1.residual.relabel([&](Point const &p) {
      return apply_factor(Side::g, G, g2_inv, p);
    });
    return {G.multiply(s1.g, s2.g), H.identity(), compose(conj, s2.residual)};
  }

  // g1 h1 a1 g2 h2 a2
  //   = (g1 g2)(h1 h2) (h2^-1 [h1^-1, g2^-1] h2) ((g2 h2)^-1 a1 (g2 h2)) a2
  Element h2_inv = H.inverse(s2.h);
  auto by_h2_inv = [&](Point const &p) {
    return apply_factor(Side::h, H, h2_inv, p);
  };

  FinPerm twist;
  if (!H.is_identity(s1.h) && !G.is_identity(s2.g)) {
    // [h1^-1, g2^-1] is the inverse of the 3-cycle (e; g2^-1; h1^-1).
    auto comm = FinPerm::three_cycle(
      Point::base(), Point::unchecked(Side::h, H.inverse(s1.h)),
      Point::unchecked(Side::g, g2_inv));
    twist = comm.relabel(by_h2_inv);
  }

  auto conj = s1.residual.relabel([&](Point const &p) {
    return by_h2_inv(apply_factor(Side::g, G, g2_inv, p));
  });

  return {G.multiply(s1.g, s2.g), H.multiply(s1.h, s2.h),
          compose(twist, compose(conj, s2.residual))};
}

PvElement PvContext::multiply(PvElement const &s1, PvElement const &s2) const
{
  auto product = multiply_unchecked(s1, s2);
  if (_options.verify_products) {
    if (auto bad = check_product(s1, s2, product))
      throw Error("product law disagrees with the action at point " +
                  _fmt.format(*bad) + ": " + format(s1) + " * " + format(s2));
  }
  return product;
}

PvElement PvContext::invert(PvElement const &sigma) const
{
  // (g h a)^-1 = a^-1 h^-1 g^-1, normalised block by block.
  PvElement a_inv{_g->identity(), _h->identity(), sigma.residual.inverse()};
  return multiply(multiply(a_inv, from_h(_h->inverse(sigma.h))),
                  from_g(_g->inverse(sigma.g)));
}

PvElement PvContext::normalize(Word const &word) const
{
  auto result = identity();
  for (auto const &letter : word)
    result = multiply(result, from_letter(letter));
  return result;
}

PvElement PvContext::power(PvElement const &sigma, std::uint64_t k) const
{
  auto result = identity();
  auto base = sigma;
  while (k > 0) {
    if (k & 1u)
      result = multiply(result, base);
    k >>= 1;
    if (k > 0)
      base = multiply(base, base);
  }
  return result;
}

PvElement PvContext::commutator(Element const &g, Element const &h) const
{
  if (!_g->contains(g) || !_h->contains(h))
    throw PreconditionError("commutator arguments are not factor elements");
  if (_g->is_identity(g) || _h->is_identity(h))
    return identity();
  return {_g->identity(), _h->identity(),
          FinPerm::three_cycle(Point::base(), Point::unchecked(Side::g, g),
                               Point::unchecked(Side::h, h))};
}

std::pair<Element, Element> PvContext::project(PvElement const &sigma) const
{
  if (_regime != Regime::both_infinite)
    throw RegimeError("projection onto H is only defined when both factors "
                      "are infinite; use project_g");
  return {sigma.g, sigma.h};
}

Element PvContext::project_g(PvElement const &sigma) const { return sigma.g; }

bool PvContext::in_monolith(PvElement const &sigma) const
{
  require_regime(Regime::both_infinite, "in_monolith");
  return _g->is_identity(sigma.g) && _h->is_identity(sigma.h);
}

PvOrder PvContext::element_order(PvElement const &sigma,
                                 std::uint64_t cap) const
{
  auto og = _g->element_order(sigma.g);
  auto oh = _h->element_order(sigma.h);
  if (og.is_infinite() || oh.is_infinite())
    return {PvOrder::Kind::infinite, 0};

  // sigma^m has trivial projections for m = lcm of the factor orders, so the
  // order is exactly m times the order of the finitary permutation sigma^m.
  auto m = std::lcm(og.value(), oh.value());
  if (m > cap)
    return {PvOrder::Kind::exceeds_cap, 0};
  auto k = power(sigma, m).residual.order();
  if (k > cap / m)
    return {PvOrder::Kind::exceeds_cap, 0};
  return {PvOrder::Kind::finite, m * k};
}

PvElement PvContext::stabilizer_lift(Element const &h,
                                     Element const &h_other) const
{
  if (_h->is_identity(h))
    throw PreconditionError("stabilizer lift needs a nontrivial h");
  if (h_other == h || _h->is_identity(h_other))
    throw PreconditionError("stabilizer lift needs h' distinct from h and e");
  auto cycle = FinPerm::three_cycle(Point::unchecked(Side::h, h), Point::base(),
                                    Point::unchecked(Side::h, h_other));
  return multiply(from_perm(std::move(cycle)), from_h(h));
}

std::vector<Point> PvContext::product_probe_points(PvElement const &s1,
                                                   PvElement const &s2,
                                                   PvElement const &product) const
{
  auto const &G = *_g;
  auto const &H = *_h;
  std::set<Point> probes;
  for (auto const *sigma : {&s1, &s2, &product})
    for (auto const &p : sigma->residual.support())
      probes.insert(p);

  auto g2_inv = G.inverse(s2.g);
  auto h2_inv = H.inverse(s2.h);
  for (auto const &p : s1.residual.support())
    probes.insert(apply_factor(Side::h, H, h2_inv,
                               apply_factor(Side::g, G, g2_inv, p)));

  auto h1_inv = H.inverse(s1.h);
  probes.insert(Point::base());
  probes.insert(Point::on(Side::g, G, g2_inv));
  probes.insert(Point::on(Side::g, G, s2.g));
  probes.insert(Point::on(Side::h, H, h1_inv));
  probes.insert(Point::on(Side::h, H, h2_inv));
  probes.insert(Point::on(Side::h, H, s2.h));
  probes.insert(Point::on(Side::h, H, H.multiply(h2_inv, h1_inv)));
  return {probes.begin(), probes.end()};
}

std::optional<Point> PvContext::check_product(PvElement const &s1,
                                              PvElement const &s2,
                                              PvElement const &product,
                                              std::vector<Point> const &extra) const
{
  auto agree = [&](Point const &p) {
    return act(product, p) == act(s1, act(s2, p));
  };
  for (auto const &p : product_probe_points(s1, s2, product))
    if (!agree(p))
      return p;
  for (auto const &p : extra)
    if (!agree(p))
      return p;
  return std::nullopt;
}

bool PvContext::is_valid(PvElement const &sigma) const
{
  if (!_g->contains(sigma.g) || !_h->contains(sigma.h))
    return false;
  if (_regime == Regime::mixed && !_h->is_identity(sigma.h))
    return false;
  for (auto const &p : sigma.residual.support()) {
    if (p.is_base())
      continue;
    auto const &grp = p.side() == Side::g ? *_g : *_h;
    if (!grp.contains(p.payload()) || grp.is_identity(p.payload()))
      return false;
  }
  if (sigma.residual.parity() == Parity::odd)
    return _regime == Regime::mixed &&
           (_odd_residual_allowed || !_options.strict_membership);
  return true;
}

std::string PvContext::format(PvElement const &sigma) const
{
  return "g=" + _g->format(sigma.g) + " h=" + _h->format(sigma.h) +
         " a=" + sigma.residual.format(_fmt);
}

Word PvContext::parse_word(std::string_view text) const
{
  Word word;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && is_space(text[pos]))
      ++pos;
    if (pos >= text.size())
      break;

    auto start = pos;
    auto colon = text.find(':', pos);
    if (colon == std::string_view::npos)
      throw ParseError("expected a letter G:<lit>, H:<lit> or PERM:<cycles>",
                       start);
    auto tag = text.substr(pos, colon - pos);
    pos = colon + 1;

    if (tag == "PERM") {
      word.emplace_back(FinPerm::parse_prefix(text, pos, _fmt));
      continue;
    }
    if (tag != "G" && tag != "H")
      throw ParseError("unknown letter tag '" + std::string(tag) + "'", start);

    auto lit_start = pos;
    while (pos < text.size() && !is_space(text[pos]))
      ++pos;
    auto literal = text.substr(lit_start, pos - lit_start);
    auto const &grp = tag == "G" ? *_g : *_h;
    Element x;
    try {
      x = grp.parse(literal);
    } catch (ParseError const &e) {
      throw ParseError(e.message(), lit_start + e.position());
    }
    if (tag == "G")
      word.emplace_back(GLetter{std::move(x)});
    else
      word.emplace_back(HLetter{std::move(x)});
  }
  return word;
}

Point PvContext::random_point(std::mt19937_64 &rng, std::int64_t radius) const
{
  std::bernoulli_distribution side;
  if (side(rng))
    return Point::on(Side::g, *_g, _g->random(rng, radius));
  return Point::on(Side::h, *_h, _h->random(rng, radius));
}

PvElement PvContext::random_element(std::mt19937_64 &rng, std::int64_t radius,
                                    unsigned cycles) const
{
  FinPerm a;
  for (unsigned c = 0; c < cycles; ++c) {
    Point p, q, r;
    int attempts = 0;
    do {
      p = random_point(rng, radius);
      q = random_point(rng, radius);
      r = random_point(rng, radius);
    } while ((p == q || q == r || p == r) && ++attempts < 100);
    if (p == q || q == r || p == r)
      break;
    a = compose(a, FinPerm::three_cycle(p, q, r));
  }
  auto gh = multiply(from_g(_g->random(rng, radius)),
                     from_h(_h->random(rng, radius)));
  return multiply(gh, from_perm(std::move(a)));
}

} // namespace glued
