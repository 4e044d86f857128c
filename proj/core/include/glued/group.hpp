#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "element.hpp"

namespace glued
{

enum class GroupKind
{
  table,
  cyclic,
  integers,
  lattice,
  free
};

inline constexpr std::size_t default_ball_cap = 1'000'000;

/// Order of a group element: a positive integer or infinite.
class ElementOrder
{
public:
  static ElementOrder infinite() { return ElementOrder(0); }
  static ElementOrder finite(std::uint64_t k) { return ElementOrder(k); }

  bool is_infinite() const { return _value == 0; }
  std::uint64_t value() const { return _value; }

  std::string str() const
  { return is_infinite() ? "infinite" : std::to_string(_value); }

  bool operator==(ElementOrder const &) const = default;

private:
  explicit ElementOrder(std::uint64_t v) : _value(v) {}
  std::uint64_t _value;
};

// A factor group with exact element arithmetic. Instances are immutable
// after construction and may be shared freely between threads.
//
// Every kind carries a proper length function: |k| on Z, the l1 norm on
// Z^d, the reduced word length on free groups, and 0/1 (identity/other)
// on finite groups.
class Group
{
public:
  virtual ~Group() = default;

  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual nlohmann::json spec() const = 0;

  virtual Element identity() const = 0;
  virtual Element multiply(Element const &x, Element const &y) const = 0;
  virtual Element inverse(Element const &x) const = 0;
  virtual bool contains(Element const &x) const = 0;

  /// Number of elements, or nullopt when infinite.
  virtual std::optional<std::uint64_t> order() const = 0;
  bool is_finite() const { return order().has_value(); }

  virtual std::int64_t length(Element const &x) const = 0;

  /// All x with length(x) <= radius, sorted by (length, element).
  virtual std::vector<Element> ball(std::int64_t radius,
                                    std::size_t cap = default_ball_cap) const = 0;

  virtual std::string format(Element const &x) const = 0;
  virtual Element parse(std::string_view literal) const = 0;

  virtual ElementOrder element_order(Element const &x) const;

  /// Random element of length at most `radius`. Not necessarily uniform.
  virtual Element random(std::mt19937_64 &rng, std::int64_t radius) const;

  bool is_identity(Element const &x) const { return x == identity(); }
  Element power(Element const &x, std::int64_t k) const;

  /// Finite groups only: identity first, then the remaining elements in
  /// increasing element order.
  std::vector<Element> elements() const;
};

using GroupHandle = std::shared_ptr<Group const>;

GroupHandle make_integers();
GroupHandle make_lattice(std::size_t dim);
GroupHandle make_free(std::size_t rank);
GroupHandle make_cyclic(std::uint64_t n);

/// Validates the table: square, Latin, two-sided identity, associative
/// (exhaustively for n <= 64, on 10^4 seeded random triples above).
GroupHandle make_table(std::vector<std::vector<std::uint32_t>> table);

/// Symmetric group on n letters as a multiplication table (n <= 6).
GroupHandle make_symmetric(unsigned n);

/// Direct product of finite groups as a multiplication table.
GroupHandle make_product(std::vector<GroupHandle> const &factors);

/// (Z/m)^d; cyclic when d == 1, a multiplication table otherwise.
GroupHandle make_cyclic_power(std::uint64_t m, std::size_t d);

/// Builds a group from a spec document such as {"type":"cyclic","n":5}.
GroupHandle parse_group(nlohmann::json const &spec);

/// Accepts inline JSON or a shorthand: Z, Z^d, Z/n, Fk, Sn, and
/// finite products joined by 'x' (Z/2xZ/2).
GroupHandle parse_group(std::string_view text);
inline GroupHandle parse_group(char const *text)
{ return parse_group(std::string_view(text)); }
inline GroupHandle parse_group(std::string const &text)
{ return parse_group(std::string_view(text)); }

std::vector<Element> ball(Group const &group, std::int64_t radius,
                          std::size_t cap = default_ball_cap);

ElementOrder element_order(Group const &group, Element const &x);

/// Exact 2-adic valuation of a positive integer.
unsigned two_valuation(std::uint64_t n);

} // namespace glued
