#include "glued/fin_perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "glued/error.hpp"

namespace glued
{

namespace
{

bool key_less(std::pair<Point, Point> const &entry, Point const &p)
{ return entry.first < p; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

} // namespace

FinPerm FinPerm::from_sorted_or_unsorted(Mapping pairs)
{
  std::sort(pairs.begin(), pairs.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });
  FinPerm result;
  result._moved = std::move(pairs);
  return result;
}

FinPerm FinPerm::from_mapping(Mapping pairs)
{
  std::erase_if(pairs, [](auto const &pq) { return pq.first == pq.second; });
  std::sort(pairs.begin(), pairs.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });

  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i].first == pairs[i - 1].first)
      throw PreconditionError("mapping assigns two images to one point");

  std::vector<Point> images;
  images.reserve(pairs.size());
  for (auto const &pq : pairs)
    images.push_back(pq.second);
  std::sort(images.begin(), images.end());
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != pairs[i].first)
      throw PreconditionError(
        "mapping is not a permutation of its support (not injective or "
        "image differs from key set)");

  FinPerm result;
  result._moved = std::move(pairs);
  return result;
}

FinPerm FinPerm::from_cycles(std::vector<std::vector<Point>> const &cycles)
{
  Mapping pairs;
  for (auto const &cycle : cycles) {
    if (cycle.size() < 2)
      continue;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return from_mapping(std::move(pairs));
}

FinPerm FinPerm::three_cycle(Point const &p, Point const &q, Point const &r)
{
  if (p == q || q == r || p == r)
    throw PreconditionError("3-cycle needs three distinct points");
  FinPerm result;
  result._moved = {{p, q}, {q, r}, {r, p}};
  std::sort(result._moved.begin(), result._moved.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });
  return result;
}

FinPerm FinPerm::transposition(Point const &p, Point const &q)
{
  if (p == q)
    throw PreconditionError("transposition needs two distinct points");
  FinPerm result;
  if (q < p)
    result._moved = {{q, p}, {p, q}};
  else
    result._moved = {{p, q}, {q, p}};
  return result;
}

Point FinPerm::operator()(Point const &p) const
{
  auto it = std::lower_bound(_moved.begin(), _moved.end(), p, key_less);
  if (it != _moved.end() && it->first == p)
    return it->second;
  return p;
}

bool FinPerm::moves(Point const &p) const
{
  auto it = std::lower_bound(_moved.begin(), _moved.end(), p, key_less);
  return it != _moved.end() && it->first == p;
}

std::vector<Point> FinPerm::support() const
{
  std::vector<Point> s;
  s.reserve(_moved.size());
  for (auto const &pq : _moved)
    s.push_back(pq.first);
  return s;
}

FinPerm FinPerm::inverse() const
{
  Mapping pairs;
  pairs.reserve(_moved.size());
  for (auto const &[from, to] : _moved)
    pairs.emplace_back(to, from);
  return from_sorted_or_unsorted(std::move(pairs));
}

std::vector<std::size_t> FinPerm::cycle_lengths() const
{
  // Walk cycles over positions in the sorted mapping.
  auto position = [this](Point const &p) {
    return static_cast<std::size_t>(
      std::lower_bound(_moved.begin(), _moved.end(), p,
                       [](auto const &entry, Point const &q) {
                         return entry.first < q;
                       }) -
      _moved.begin());
  };
  std::vector<std::size_t> lengths;
  std::vector<char> seen(_moved.size(), 0);
  for (std::size_t i = 0; i < _moved.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = position(_moved[j].second)) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::vector<std::vector<Point>> FinPerm::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::set<Point> seen;
  // _moved is sorted, so each cycle is discovered from its least point.
  for (auto const &entry : _moved) {
    if (seen.count(entry.first))
      continue;
    std::vector<Point> cycle;
    Point p = entry.first;
    do {
      seen.insert(p);
      cycle.push_back(p);
      p = (*this)(p);
    } while (p != entry.first);
    result.push_back(std::move(cycle));
  }
  return result;
}

Parity FinPerm::parity() const
{
  auto lengths = cycle_lengths();
  return (_moved.size() - lengths.size()) % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t FinPerm::order() const
{
  std::uint64_t k = 1;
  for (auto len : cycle_lengths())
    k = std::lcm(k, static_cast<std::uint64_t>(len));
  return k;
}

FinPerm compose(FinPerm const &a, FinPerm const &b)
{
  if (b.is_identity())
    return a;
  if (a.is_identity())
    return b;

  auto const &ma = a.mapping();
  auto const &mb = b.mapping();
  FinPerm::Mapping out;
  out.reserve(ma.size() + mb.size());

  auto push = [&](Point const &p, Point const &bp) {
    Point q = a(bp);
    if (q != p)
      out.emplace_back(p, std::move(q));
  };

  std::size_t i = 0, j = 0;
  while (i < ma.size() || j < mb.size()) {
    if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
      // moved by a only
      if (ma[i].second != ma[i].first)
        out.emplace_back(ma[i].first, ma[i].second);
      ++i;
    } else if (i == ma.size() || mb[j].first < ma[i].first) {
      push(mb[j].first, mb[j].second);
      ++j;
    } else {
      push(mb[j].first, mb[j].second);
      ++i;
      ++j;
    }
  }
  FinPerm result;
  result._moved = std::move(out);
  return result;
}

std::string FinPerm::format(PointFormat const &fmt) const
{
  if (is_identity())
    return "()";
  std::string s;
  bool first_cycle = true;
  for (auto const &cycle : cycles()) {
    if (!first_cycle)
      s += ' ';
    first_cycle = false;
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        s += ' ';
      s += fmt.format(cycle[i]);
    }
    s += ')';
  }
  return s;
}

FinPerm FinPerm::parse_prefix(std::string_view text, std::size_t &pos,
                              PointFormat const &fmt)
{
  std::vector<std::vector<Point>> cycles;
  std::set<Point> used;
  bool any = false;

  while (true) {
    auto look = pos;
    while (look < text.size() && is_space(text[look]))
      ++look;
    if (look >= text.size() || text[look] != '(')
      break;
    pos = look + 1;
    any = true;

    std::vector<Point> cycle;
    while (true) {
      while (pos < text.size() && is_space(text[pos]))
        ++pos;
      if (pos >= text.size())
        throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      auto start = pos;
      while (pos < text.size() && !is_space(text[pos]) && text[pos] != ')' &&
             text[pos] != '(')
        ++pos;
      if (pos < text.size() && text[pos] == '(')
        throw ParseError("unexpected '(' inside cycle", pos);
      Point p;
      try {
        p = fmt.parse(text.substr(start, pos - start));
      } catch (ParseError const &e) {
        throw ParseError(e.message(), start + e.position());
      }
      if (!used.insert(p).second)
        throw ParseError("point '" + fmt.format(p) +
                           "' occurs twice in cycle notation",
                         start);
      cycle.push_back(std::move(p));
    }
    cycles.push_back(std::move(cycle));
  }

  if (!any)
    throw ParseError("expected '(' starting a cycle", pos);
  return from_cycles(cycles);
}

FinPerm FinPerm::parse(std::string_view text, PointFormat const &fmt)
{
  std::size_t pos = 0;
  auto result = parse_prefix(text, pos, fmt);
  while (pos < text.size() && is_space(text[pos]))
    ++pos;
  if (pos != text.size())
    throw ParseError("trailing characters after cycles", pos);
  return result;
}

} // namespace glued
