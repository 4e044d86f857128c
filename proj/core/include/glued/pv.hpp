#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fin_perm.hpp"
#include "group.hpp"
#include "point.hpp"

namespace glued
{

enum class Regime
{
  both_infinite,
  mixed, // G infinite, H finite
  both_finite
};

std::string to_string(Regime r);

// An element of the glued product in normal form g * h * a: it acts on a
// point p as g(h(a(p))).
//
// When both factors are infinite the triple is unique and a is even. In the
// mixed regime h is always the identity and a absorbs the H-part.
struct PvElement
{
  Element g;
  Element h;
  FinPerm residual;

  bool operator==(PvElement const &) const = default;
};

struct GLetter
{
  Element x;
};

struct HLetter
{
  Element y;
};

using Letter = std::variant<GLetter, HLetter, FinPerm>;
using Word = std::vector<Letter>;

/// Order of a glued-product element as reported by element_order().
struct PvOrder
{
  enum class Kind
  {
    finite,
    infinite,
    exceeds_cap
  };

  Kind kind;
  std::uint64_t value = 0;

  std::string str() const;
  bool operator==(PvOrder const &) const = default;
};

struct PvOptions
{
  /// Cross-check every product against the action oracle.
#ifdef NDEBUG
  bool verify_products = false;
#else
  bool verify_products = true;
#endif
  /// In the mixed regime, reject odd residual letters when H has no
  /// nontrivial cyclic 2-Sylow (they are not elements of the product).
  bool strict_membership = true;
};

// The glued product of two factor groups with exact element arithmetic.
// Both-finite inputs are rejected; see finite_pv.hpp.
class PvContext
{
public:
  PvContext(GroupHandle g, GroupHandle h, PvOptions options = {});

  Group const &g() const { return *_g; }
  Group const &h() const { return *_h; }
  GroupHandle const &g_handle() const { return _g; }
  GroupHandle const &h_handle() const { return _h; }
  Regime regime() const { return _regime; }
  PvOptions const &options() const { return _options; }
  PointFormat const &point_format() const { return _fmt; }

  /// Whether the residual may be odd (mixed regime with a nontrivial
  /// cyclic 2-Sylow in H).
  bool allows_odd_residual() const { return _odd_residual_allowed; }

  PvElement identity() const;
  PvElement from_g(Element x) const;
  PvElement from_h(Element y) const;
  PvElement from_perm(FinPerm a) const;
  PvElement from_letter(Letter const &letter) const;

  Point act(PvElement const &sigma, Point const &p) const;
  PvElement multiply(PvElement const &s1, PvElement const &s2) const;
  PvElement invert(PvElement const &sigma) const;
  PvElement normalize(Word const &word) const;
  PvElement power(PvElement const &sigma, std::uint64_t k) const;

  /// [g, h] = g h g^-1 h^-1.
  PvElement commutator(Element const &g, Element const &h) const;

  /// Both-infinite regime only.
  std::pair<Element, Element> project(PvElement const &sigma) const;
  Element project_g(PvElement const &sigma) const;
  bool in_monolith(PvElement const &sigma) const;

  PvOrder element_order(PvElement const &sigma, std::uint64_t cap) const;

  /// The lift (h; e; h') * h of a nontrivial h, which fixes every G-point.
  PvElement stabilizer_lift(Element const &h, Element const &h_other) const;

  /// The finite set of points on which `product` must agree with
  /// act(s1, act(s2, .)) for the normal-form multiplication to be trusted.
  std::vector<Point> product_probe_points(PvElement const &s1,
                                          PvElement const &s2,
                                          PvElement const &product) const;

  /// Compares `product` with the composition of actions on the probe points
  /// plus `extra`. Returns the first disagreeing point, if any.
  std::optional<Point> check_product(PvElement const &s1, PvElement const &s2,
                                     PvElement const &product,
                                     std::vector<Point> const &extra = {}) const;

  bool is_valid(PvElement const &sigma) const;

  /// "g=<lit> h=<lit> a=<cycles>"
  std::string format(PvElement const &sigma) const;

  /// Whitespace-separated letters "G:<lit>", "H:<lit>", "PERM:<cycles>".
  Word parse_word(std::string_view text) const;

  PvElement eval(std::string_view text) const { return normalize(parse_word(text)); }

  /// Random point with payload length at most `radius`.
  Point random_point(std::mt19937_64 &rng, std::int64_t radius) const;

  /// Random element: factor parts of length <= radius times a product of
  /// `cycles` random 3-cycles on points of length <= radius.
  PvElement random_element(std::mt19937_64 &rng, std::int64_t radius,
                           unsigned cycles = 2) const;

private:
  PvElement multiply_unchecked(PvElement const &s1, PvElement const &s2) const;
  void require_regime(Regime r, char const *op) const;

  GroupHandle _g;
  GroupHandle _h;
  Regime _regime;
  PvOptions _options;
  PointFormat _fmt;
  bool _odd_residual_allowed = false;
};

/// Whether a finite group has a nontrivial cyclic 2-Sylow subgroup, decided
/// by the existence of an element whose order has the full 2-valuation of
/// the group order.
bool has_cyclic_two_sylow(Group const &group);

} // namespace glued
