#include "glued/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

#include "glued/error.hpp"

namespace glued
{

namespace
{

std::int64_t parse_int(std::string_view text, std::string_view what)
{
  std::int64_t value = 0;
  auto const *first = text.data();
  auto const *last = text.data() + text.size();
  if (first != last && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw ParseError("invalid " + std::string(what) + " literal '" +
                     std::string(text) + "'", 0);
  return value;
}

void sort_ball(Group const &g, std::vector<Element> &xs)
{
  std::vector<std::pair<std::int64_t, Element>> keyed;
  keyed.reserve(xs.size());
  for (auto &x : xs)
    keyed.emplace_back(g.length(x), std::move(x));
  std::sort(keyed.begin(), keyed.end());
  xs.clear();
  for (auto &[len, x] : keyed)
    xs.push_back(std::move(x));
}

void check_cap(std::size_t size, std::size_t cap)
{
  if (size > cap)
    throw BudgetError("ball would exceed cardinality cap of " +
                      std::to_string(cap) + " elements");
}

class Integers final : public Group
{
public:
  GroupKind kind() const override { return GroupKind::integers; }
  std::string name() const override { return "Z"; }
  nlohmann::json spec() const override { return {{"type", "integers"}}; }

  Element identity() const override { return Element{0}; }

  Element multiply(Element const &x, Element const &y) const override
  { return Element{x[0] + y[0]}; }

  Element inverse(Element const &x) const override
  { return Element{-x[0]}; }

  bool contains(Element const &x) const override { return x.size() == 1; }

  std::optional<std::uint64_t> order() const override { return std::nullopt; }

  std::int64_t length(Element const &x) const override
  { return x[0] < 0 ? -x[0] : x[0]; }

  std::vector<Element> ball(std::int64_t radius, std::size_t cap) const override
  {
    if (radius < 0)
      return {};
    check_cap(static_cast<std::size_t>(2 * radius + 1), cap);
    std::vector<Element> xs{Element{0}};
    for (std::int64_t k = 1; k <= radius; ++k) {
      xs.push_back(Element{-k});
      xs.push_back(Element{k});
    }
    return xs;
  }

  std::string format(Element const &x) const override
  { return std::to_string(x[0]); }

  Element parse(std::string_view literal) const override
  { return Element{parse_int(literal, "integer")}; }

  Element random(std::mt19937_64 &rng, std::int64_t radius) const override
  {
    std::uniform_int_distribution<std::int64_t> dist(-radius, radius);
    return Element{dist(rng)};
  }
};

class Lattice final : public Group
{
public:
  explicit Lattice(std::size_t dim) : _dim(dim) {}

  GroupKind kind() const override { return GroupKind::lattice; }
  std::string name() const override { return "Z^" + std::to_string(_dim); }
  nlohmann::json spec() const override
  { return {{"type", "lattice"}, {"d", _dim}}; }

  Element identity() const override
  { return Element(Element::Storage(_dim, 0)); }

  Element multiply(Element const &x, Element const &y) const override
  {
    Element::Storage r(_dim);
    for (std::size_t i = 0; i < _dim; ++i)
      r[i] = x[i] + y[i];
    return Element(std::move(r));
  }

  Element inverse(Element const &x) const override
  {
    Element::Storage r(_dim);
    for (std::size_t i = 0; i < _dim; ++i)
      r[i] = -x[i];
    return Element(std::move(r));
  }

  bool contains(Element const &x) const override { return x.size() == _dim; }

  std::optional<std::uint64_t> order() const override { return std::nullopt; }

  std::int64_t length(Element const &x) const override
  {
    std::int64_t l = 0;
    for (auto c : x.coords())
      l += c < 0 ? -c : c;
    return l;
  }

  std::vector<Element> ball(std::int64_t radius, std::size_t cap) const override
  {
    std::vector<Element> xs;
    if (radius < 0)
      return xs;
    Element::Storage cur(_dim, 0);
    enumerate(0, radius, cur, xs, cap);
    sort_ball(*this, xs);
    return xs;
  }

  std::string format(Element const &x) const override
  {
    std::string s;
    for (std::size_t i = 0; i < _dim; ++i) {
      if (i)
        s += ',';
      s += std::to_string(x[i]);
    }
    return s;
  }

  Element parse(std::string_view literal) const override
  {
    Element::Storage r;
    std::size_t start = 0;
    while (true) {
      auto comma = literal.find(',', start);
      auto part = literal.substr(start, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - start);
      r.push_back(parse_int(part, "lattice coordinate"));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
    if (r.size() != _dim)
      throw ParseError("lattice literal '" + std::string(literal) +
                       "' does not have " + std::to_string(_dim) +
                       " coordinates", 0);
    return Element(std::move(r));
  }

  Element random(std::mt19937_64 &rng, std::int64_t radius) const override
  {
    Element::Storage r(_dim, 0);
    std::uniform_int_distribution<std::int64_t> budget_dist(0, radius);
    std::int64_t budget = budget_dist(rng);
    std::uniform_int_distribution<std::size_t> axis(0, _dim - 1);
    std::bernoulli_distribution sign;
    for (std::int64_t step = 0; step < budget; ++step)
      r[axis(rng)] += sign(rng) ? 1 : -1;
    return Element(std::move(r));
  }

private:
  void enumerate(std::size_t axis, std::int64_t left, Element::Storage &cur,
                 std::vector<Element> &out, std::size_t cap) const
  {
    if (axis == _dim) {
      out.emplace_back(cur);
      check_cap(out.size(), cap);
      return;
    }
    for (std::int64_t c = -left; c <= left; ++c) {
      cur[axis] = c;
      enumerate(axis + 1, left - (c < 0 ? -c : c), cur, out, cap);
    }
    cur[axis] = 0;
  }

  std::size_t _dim;
};

class Free final : public Group
{
public:
  explicit Free(std::size_t rank) : _rank(rank) {}

  GroupKind kind() const override { return GroupKind::free; }
  std::string name() const override { return "F" + std::to_string(_rank); }
  nlohmann::json spec() const override
  { return {{"type", "free"}, {"rank", _rank}}; }

  Element identity() const override { return Element(); }

  Element multiply(Element const &x, Element const &y) const override
  {
    Element::Storage r(x.storage());
    for (auto letter : y.coords()) {
      if (!r.empty() && r.back() == -letter)
        r.pop_back();
      else
        r.push_back(letter);
    }
    return Element(std::move(r));
  }

  Element inverse(Element const &x) const override
  {
    Element::Storage r;
    r.reserve(x.size());
    for (auto it = x.storage().rbegin(); it != x.storage().rend(); ++it)
      r.push_back(-*it);
    return Element(std::move(r));
  }

  bool contains(Element const &x) const override
  {
    auto rank = static_cast<std::int64_t>(_rank);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0 || x[i] > rank || x[i] < -rank)
        return false;
      if (i > 0 && x[i] == -x[i - 1])
        return false;
    }
    return true;
  }

  std::optional<std::uint64_t> order() const override { return std::nullopt; }

  std::int64_t length(Element const &x) const override
  { return static_cast<std::int64_t>(x.size()); }

  std::vector<Element> ball(std::int64_t radius, std::size_t cap) const override
  {
    std::vector<Element> xs;
    if (radius < 0)
      return xs;
    xs.push_back(identity());
    std::size_t layer_begin = 0;
    for (std::int64_t len = 1; len <= radius; ++len) {
      std::size_t layer_end = xs.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (auto letter : letters()) {
          Element const &w = xs[i];
          if (w.size() > 0 && w[w.size() - 1] == -letter)
            continue;
          Element::Storage next(w.storage());
          next.push_back(letter);
          xs.emplace_back(std::move(next));
          check_cap(xs.size(), cap);
        }
      }
      layer_begin = layer_end;
    }
    sort_ball(*this, xs);
    return xs;
  }

  std::string format(Element const &x) const override
  {
    if (x.size() == 0)
      return "1";
    std::string s;
    for (auto letter : x.coords())
      s += letter > 0 ? static_cast<char>('a' + letter - 1)
                      : static_cast<char>('A' - letter - 1);
    return s;
  }

  Element parse(std::string_view literal) const override
  {
    Element::Storage r;
    if (literal == "1" || literal.empty())
      return Element();
    for (std::size_t i = 0; i < literal.size(); ++i) {
      char c = literal[i];
      std::int64_t letter = 0;
      if (c >= 'a' && c < static_cast<char>('a' + _rank))
        letter = c - 'a' + 1;
      else if (c >= 'A' && c < static_cast<char>('A' + _rank))
        letter = -(c - 'A' + 1);
      else
        throw ParseError("invalid letter '" + std::string(1, c) +
                         "' for free group of rank " + std::to_string(_rank),
                         i);
      if (!r.empty() && r.back() == -letter)
        r.pop_back();
      else
        r.push_back(letter);
    }
    return Element(std::move(r));
  }

  Element random(std::mt19937_64 &rng, std::int64_t radius) const override
  {
    std::uniform_int_distribution<std::int64_t> len_dist(0, radius);
    auto len = len_dist(rng);
    auto ls = letters();
    std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
    Element::Storage r;
    while (static_cast<std::int64_t>(r.size()) < len) {
      auto letter = ls[pick(rng)];
      if (!r.empty() && r.back() == -letter)
        continue;
      r.push_back(letter);
    }
    return Element(std::move(r));
  }

private:
  std::vector<std::int64_t> letters() const
  {
    std::vector<std::int64_t> ls;
    for (std::size_t i = 1; i <= _rank; ++i) {
      ls.push_back(static_cast<std::int64_t>(i));
      ls.push_back(-static_cast<std::int64_t>(i));
    }
    return ls;
  }

  std::size_t _rank;
};

// Shared behaviour of the finite kinds: length is 0 on the identity and 1
// elsewhere, so every ball of positive radius is the whole group.
class FiniteGroup : public Group
{
public:
  std::int64_t length(Element const &x) const override
  { return is_identity(x) ? 0 : 1; }

  std::vector<Element> ball(std::int64_t radius, std::size_t cap) const override
  {
    if (radius < 0)
      return {};
    if (radius == 0)
      return {identity()};
    check_cap(*order(), cap);
    return elements();
  }

  Element random(std::mt19937_64 &rng, std::int64_t radius) const override
  {
    if (radius <= 0)
      return identity();
    std::uniform_int_distribution<std::uint64_t> dist(0, *order() - 1);
    return Element{static_cast<std::int64_t>(dist(rng))};
  }
};

class Cyclic final : public FiniteGroup
{
public:
  explicit Cyclic(std::uint64_t n) : _n(static_cast<std::int64_t>(n)) {}

  GroupKind kind() const override { return GroupKind::cyclic; }
  std::string name() const override { return "Z/" + std::to_string(_n); }
  nlohmann::json spec() const override
  { return {{"type", "cyclic"}, {"n", _n}}; }

  Element identity() const override { return Element{0}; }

  Element multiply(Element const &x, Element const &y) const override
  { return Element{(x[0] + y[0]) % _n}; }

  Element inverse(Element const &x) const override
  { return Element{(_n - x[0]) % _n}; }

  bool contains(Element const &x) const override
  { return x.size() == 1 && x[0] >= 0 && x[0] < _n; }

  std::optional<std::uint64_t> order() const override
  { return static_cast<std::uint64_t>(_n); }

  ElementOrder element_order(Element const &x) const override
  {
    return ElementOrder::finite(
      static_cast<std::uint64_t>(_n / std::gcd(_n, x[0])));
  }

  std::string format(Element const &x) const override
  { return std::to_string(x[0]); }

  Element parse(std::string_view literal) const override
  {
    auto k = parse_int(literal, "cyclic") % _n;
    return Element{k < 0 ? k + _n : k};
  }

private:
  std::int64_t _n;
};

class Table final : public FiniteGroup
{
public:
  explicit Table(std::vector<std::vector<std::uint32_t>> table)
    : _table(std::move(table))
  {
    auto n = _table.size();
    _identity = n;
    for (std::size_t e = 0; e < n && _identity == n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = _table[e][x] == x && _table[x][e] == x;
      if (ok)
        _identity = e;
    }
    if (_identity == n)
      throw Error("multiplication table has no two-sided identity");
    _inverse.resize(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (_table[x][y] == _identity)
          _inverse[x] = static_cast<std::uint32_t>(y);
  }

  GroupKind kind() const override { return GroupKind::table; }
  std::string name() const override
  { return "table(" + std::to_string(_table.size()) + ")"; }
  nlohmann::json spec() const override
  { return {{"type", "table"}, {"table", _table}}; }

  Element identity() const override
  { return Element{static_cast<std::int64_t>(_identity)}; }

  Element multiply(Element const &x, Element const &y) const override
  { return Element{static_cast<std::int64_t>(_table[x[0]][y[0]])}; }

  Element inverse(Element const &x) const override
  { return Element{static_cast<std::int64_t>(_inverse[x[0]])}; }

  bool contains(Element const &x) const override
  {
    return x.size() == 1 && x[0] >= 0 &&
           x[0] < static_cast<std::int64_t>(_table.size());
  }

  std::optional<std::uint64_t> order() const override
  { return _table.size(); }

  std::string format(Element const &x) const override
  { return std::to_string(x[0]); }

  Element parse(std::string_view literal) const override
  {
    auto k = parse_int(literal, "table index");
    if (k < 0 || k >= static_cast<std::int64_t>(_table.size()))
      throw ParseError("table index " + std::to_string(k) + " out of range",
                       0);
    return Element{k};
  }

private:
  std::vector<std::vector<std::uint32_t>> _table;
  std::size_t _identity;
  std::vector<std::uint32_t> _inverse;
};

void validate_table(std::vector<std::vector<std::uint32_t>> const &t)
{
  auto n = t.size();
  if (n == 0)
    throw Error("multiplication table is empty");
  for (auto const &row : t) {
    if (row.size() != n)
      throw Error("multiplication table is not square");
    std::vector<bool> seen(n);
    for (auto v : row) {
      if (v >= n || seen[v])
        throw Error("multiplication table is not a Latin square");
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<bool> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[t[r][c]])
        throw Error("multiplication table is not a Latin square");
      seen[t[r][c]] = true;
    }
  }

  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    if (t[t[x][y]][z] != t[x][t[y][z]])
      throw Error("multiplication table is not associative at (" +
                  std::to_string(x) + "," + std::to_string(y) + "," +
                  std::to_string(z) + ")");
  };
  if (n <= 64) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          check(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 10'000; ++i)
      check(pick(rng), pick(rng), pick(rng));
  }
}

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

GroupHandle parse_shorthand(std::string const &text)
{
  if (text.find('x') != std::string::npos) {
    std::vector<GroupHandle> factors;
    std::size_t start = 0;
    while (true) {
      auto pos = text.find('x', start);
      factors.push_back(parse_shorthand(text.substr(start, pos - start)));
      if (pos == std::string::npos)
        break;
      start = pos + 1;
    }
    return make_product(factors);
  }
  if (text == "Z")
    return make_integers();
  if (text.rfind("Z^", 0) == 0)
    return make_lattice(static_cast<std::size_t>(
      parse_int(std::string_view(text).substr(2), "lattice dimension")));
  if (text.rfind("Z/", 0) == 0)
    return make_cyclic(static_cast<std::uint64_t>(
      parse_int(std::string_view(text).substr(2), "cyclic order")));
  if (text.size() > 1 && text[0] == 'F')
    return make_free(static_cast<std::size_t>(
      parse_int(std::string_view(text).substr(1), "free rank")));
  if (text.size() > 1 && text[0] == 'S')
    return make_symmetric(static_cast<unsigned>(
      parse_int(std::string_view(text).substr(1), "symmetric degree")));
  throw ParseError("unrecognised group '" + text + "'", 0);
}

} // namespace

ElementOrder Group::element_order(Element const &x) const
{
  if (is_identity(x))
    return ElementOrder::finite(1);
  if (!is_finite())
    return ElementOrder::infinite();
  Element y = x;
  std::uint64_t k = 1;
  while (!is_identity(y)) {
    y = multiply(y, x);
    ++k;
  }
  return ElementOrder::finite(k);
}

Element Group::random(std::mt19937_64 &rng, std::int64_t radius) const
{
  auto xs = ball(radius);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  return xs[pick(rng)];
}

Element Group::power(Element const &x, std::int64_t k) const
{
  Element base = k < 0 ? inverse(x) : x;
  auto e = k < 0 ? -k : k;
  Element result = identity();
  while (e > 0) {
    if (e & 1)
      result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<Element> Group::elements() const
{
  auto n = order();
  if (!n)
    throw RegimeError("cannot enumerate the infinite group " + name());
  std::vector<Element> xs;
  xs.reserve(*n);
  xs.push_back(identity());
  for (std::uint64_t i = 0; i < *n; ++i) {
    Element x{static_cast<std::int64_t>(i)};
    if (!is_identity(x))
      xs.push_back(std::move(x));
  }
  return xs;
}

GroupHandle make_integers() { return std::make_shared<Integers>(); }

GroupHandle make_lattice(std::size_t dim)
{
  if (dim == 0)
    throw Error("lattice dimension must be positive");
  return std::make_shared<Lattice>(dim);
}

GroupHandle make_free(std::size_t rank)
{
  if (rank == 0 || rank > 26)
    throw Error("free group rank must be between 1 and 26");
  return std::make_shared<Free>(rank);
}

GroupHandle make_cyclic(std::uint64_t n)
{
  if (n == 0)
    throw Error("cyclic group order must be positive");
  return std::make_shared<Cyclic>(n);
}

GroupHandle make_table(std::vector<std::vector<std::uint32_t>> table)
{
  validate_table(table);
  return std::make_shared<Table>(std::move(table));
}

GroupHandle make_symmetric(unsigned n)
{
  if (n == 0 || n > 6)
    throw Error("symmetric group degree must be between 1 and 6");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<unsigned>, std::uint32_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i], static_cast<std::uint32_t>(i));

  std::vector<std::vector<std::uint32_t>> t(
    perms.size(), std::vector<std::uint32_t>(perms.size()));
  std::vector<unsigned> r(n);
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      for (unsigned k = 0; k < n; ++k)
        r[k] = perms[i][perms[j][k]];
      t[i][j] = index.at(r);
    }
  return std::make_shared<Table>(std::move(t));
}

GroupHandle make_product(std::vector<GroupHandle> const &factors)
{
  if (factors.empty())
    throw Error("direct product needs at least one factor");
  if (factors.size() == 1)
    return factors.front();

  std::vector<std::vector<Element>> elts;
  std::size_t total = 1;
  for (auto const &f : factors) {
    if (!f->is_finite())
      throw Error("direct products are only supported for finite factors");
    elts.push_back(f->elements());
    total *= elts.back().size();
  }
  if (total > 4096)
    throw BudgetError("direct product table would exceed 4096 elements");

  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> digits(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      digits[k] = idx % elts[k].size();
      idx /= elts[k].size();
    }
    return digits;
  };
  std::vector<std::map<Element, std::size_t>> pos(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (std::size_t i = 0; i < elts[k].size(); ++i)
      pos[k].emplace(elts[k][i], i);

  std::vector<std::vector<std::uint32_t>> t(
    total, std::vector<std::uint32_t>(total));
  for (std::size_t i = 0; i < total; ++i) {
    auto di = decode(i);
    for (std::size_t j = 0; j < total; ++j) {
      auto dj = decode(j);
      std::size_t idx = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        auto prod = factors[k]->multiply(elts[k][di[k]], elts[k][dj[k]]);
        idx = idx * elts[k].size() + pos[k].at(prod);
      }
      t[i][j] = static_cast<std::uint32_t>(idx);
    }
  }
  return std::make_shared<Table>(std::move(t));
}

GroupHandle make_cyclic_power(std::uint64_t m, std::size_t d)
{
  if (d == 0)
    throw Error("dimension must be positive");
  if (d == 1)
    return make_cyclic(m);
  return make_product(std::vector<GroupHandle>(d, make_cyclic(m)));
}

GroupHandle parse_group(nlohmann::json const &spec)
{
  if (!spec.is_object() || !spec.contains("type") || !spec["type"].is_string())
    throw ParseError("group spec must be an object with a string \"type\"", 0);
  auto type = spec["type"].get<std::string>();
  try {
    if (type == "integers")
      return make_integers();
    if (type == "lattice")
      return make_lattice(spec.at(spec.contains("d") ? "d" : "dim")
                            .get<std::size_t>());
    if (type == "free")
      return make_free(spec.at("rank").get<std::size_t>());
    if (type == "cyclic")
      return make_cyclic(spec.at("n").get<std::uint64_t>());
    if (type == "table")
      return make_table(
        spec.at("table").get<std::vector<std::vector<std::uint32_t>>>());
    if (type == "symmetric")
      return make_symmetric(spec.at("n").get<unsigned>());
    if (type == "product") {
      std::vector<GroupHandle> factors;
      for (auto const &f : spec.at("factors"))
        factors.push_back(parse_group(f));
      return make_product(factors);
    }
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("malformed group spec: ") + e.what(), 0);
  }
  throw ParseError("unknown group type \"" + type + "\"", 0);
}

GroupHandle parse_group(std::string_view text)
{
  auto t = trim(text);
  if (t.empty())
    throw ParseError("empty group spec", 0);
  if (t.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(t);
    } catch (nlohmann::json::parse_error const &e) {
      throw ParseError(std::string("invalid group spec JSON: ") + e.what(),
                       e.byte);
    }
    return parse_group(doc);
  }
  if (t.size() > 5 && t.substr(t.size() - 5) == ".json") {
    std::ifstream in(t);
    if (!in)
      throw Error("cannot open group spec file '" + t + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group(std::string_view(ss.str()));
  }
  return parse_shorthand(t);
}

std::vector<Element> ball(Group const &group, std::int64_t radius,
                          std::size_t cap)
{ return group.ball(radius, cap); }

ElementOrder element_order(Group const &group, Element const &x)
{ return group.element_order(x); }

unsigned two_valuation(std::uint64_t n)
{
  if (n == 0)
    throw PreconditionError("2-adic valuation of zero is undefined");
  unsigned v = 0;
  while ((n & 1u) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

} // namespace glued
