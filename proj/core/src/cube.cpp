#include "glued/cube.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "glued/error.hpp"

namespace glued
{

namespace
{

bool in_g(Point const &p) { return p.side() != Side::h; }

std::vector<Point> sorted_unique(std::vector<Point> pts)
{
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool sorted_contains(std::vector<Point> const &pts, Point const &p)
{
  return std::binary_search(pts.begin(), pts.end(), p);
}

} // namespace

CubeVertex CubeVertex::from_sets(std::vector<Point> removed,
                                 std::vector<Point> added)
{
  CubeVertex v;
  v._removed = sorted_unique(std::move(removed));
  v._added = sorted_unique(std::move(added));
  for (auto const &p : v._removed)
    if (!in_g(p))
      throw PreconditionError("removed points must lie in G");
  for (auto const &p : v._added)
    if (in_g(p))
      throw PreconditionError("added points must lie in H minus the basepoint");
  return v;
}

CubeVertex CubeVertex::toggle(std::vector<Point> toggled)
{
  std::vector<Point> removed, added;
  for (auto &p : sorted_unique(std::move(toggled)))
    (in_g(p) ? removed : added).push_back(std::move(p));
  return from_sets(std::move(removed), std::move(added));
}

std::vector<Point> CubeVertex::toggled() const
{
  // Points order base < G-side < H-side, so this is already sorted.
  std::vector<Point> all(_removed);
  all.insert(all.end(), _added.begin(), _added.end());
  return all;
}

bool CubeVertex::contains(Point const &p) const
{
  return in_g(p) ? !sorted_contains(_removed, p) : sorted_contains(_added, p);
}

std::strong_ordering CubeVertex::operator<=>(CubeVertex const &other) const
{
  if (auto c = s_invariant(*this) <=> s_invariant(other); c != 0)
    return c;
  auto a = toggled();
  auto b = other.toggled();
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::int64_t s_invariant(CubeVertex const &v)
{
  return static_cast<std::int64_t>(v.added().size()) -
         static_cast<std::int64_t>(v.removed().size());
}

CubeVertex act_vertex(PvContext const &ctx, PvElement const &sigma,
                      CubeVertex const &v)
{
  if (ctx.regime() != Regime::both_infinite)
    throw RegimeError("cube complex action needs infinite factors");

  // Outside this set sigma keeps G-points in G and H-points out of it, so
  // only these points can change ledger.
  auto candidates = v.toggled();
  for (auto const &[p, q] : sigma.residual.mapping())
    candidates.push_back(p);
  candidates.push_back(Point::base());
  candidates.push_back(Point::on(Side::h, ctx.h(), ctx.h().inverse(sigma.h)));
  candidates = sorted_unique(std::move(candidates));

  std::vector<Point> removed, added;
  for (auto const &p : candidates) {
    auto q = ctx.act(sigma, p);
    bool member = v.contains(p);
    if (in_g(q) && !member)
      removed.push_back(std::move(q));
    else if (!in_g(q) && member)
      added.push_back(std::move(q));
  }
  return CubeVertex::from_sets(std::move(removed), std::move(added));
}

std::size_t distance(CubeVertex const &v, CubeVertex const &w)
{
  std::vector<Point> diff;
  std::set_symmetric_difference(v.removed().begin(), v.removed().end(),
                                w.removed().begin(), w.removed().end(),
                                std::back_inserter(diff));
  std::set_symmetric_difference(v.added().begin(), v.added().end(),
                                w.added().begin(), w.added().end(),
                                std::back_inserter(diff));
  return diff.size();
}

bool fixed_by_g(CubeVertex const &v) { return v.removed().empty(); }

bool fixed_by_h(CubeVertex const &v)
{
  return v.added().empty() && sorted_contains(v.removed(), Point::base());
}

std::vector<Point> template_points(PvContext const &ctx, std::int64_t n)
{
  auto side = n >= 0 ? Side::h : Side::g;
  auto const &grp = side == Side::h ? ctx.h() : ctx.g();
  auto count = static_cast<std::size_t>(n >= 0 ? n : -n);
  std::vector<Point> pts;
  std::size_t previous = 0;
  for (std::int64_t r = 0; pts.size() < count; ++r) {
    auto b = grp.ball(r);
    if (r > 0 && b.size() == previous)
      throw PreconditionError("template needs more points than the factor has");
    previous = b.size();
    pts.clear();
    for (auto const &x : b) {
      if (side == Side::h && grp.is_identity(x))
        continue;
      pts.push_back(Point::on(side, grp, x));
      if (pts.size() == count)
        break;
    }
  }
  return pts;
}

CubeVertex template_vertex(PvContext const &ctx, std::int64_t n)
{
  auto pts = template_points(ctx, n);
  return n >= 0 ? CubeVertex::from_sets({}, std::move(pts))
                : CubeVertex::from_sets(std::move(pts), {});
}

namespace
{

// An even finitely supported permutation carrying v onto w (same fiber):
// pair off the points of v and of its complement inside the union of both
// ledgers, then fix parity with a transposition of two G-points lying in w
// and outside that union.
FinPerm matching(PvContext const &ctx, CubeVertex const &v, CubeVertex const &w)
{
  auto scope = v.toggled();
  auto wt = w.toggled();
  scope.insert(scope.end(), wt.begin(), wt.end());
  scope = sorted_unique(std::move(scope));

  std::vector<Point> in_v, out_v, in_w, out_w;
  for (auto const &p : scope) {
    (v.contains(p) ? in_v : out_v).push_back(p);
    (w.contains(p) ? in_w : out_w).push_back(p);
  }
  FinPerm::Mapping pairs;
  for (std::size_t i = 0; i < in_v.size(); ++i)
    pairs.emplace_back(in_v[i], in_w[i]);
  for (std::size_t i = 0; i < out_v.size(); ++i)
    pairs.emplace_back(out_v[i], out_w[i]);
  auto a = FinPerm::from_mapping(std::move(pairs));
  if (a.parity() == Parity::even)
    return a;

  std::vector<Point> fresh;
  for (std::int64_t r = 1; fresh.size() < 2; ++r) {
    fresh.clear();
    for (auto const &x : ctx.g().ball(r)) {
      if (ctx.g().is_identity(x))
        continue;
      auto p = Point::unchecked(Side::g, x);
      if (!sorted_contains(scope, p))
        fresh.push_back(std::move(p));
      if (fresh.size() == 2)
        break;
    }
  }
  return FinPerm::transposition(fresh[0], fresh[1]) * a;
}

} // namespace

PvElement transporter(PvContext const &ctx, CubeVertex const &v,
                      CubeVertex const &w)
{
  auto n = s_invariant(v);
  if (n != s_invariant(w))
    throw FiberMismatch(n, s_invariant(w));
  if (ctx.regime() != Regime::both_infinite)
    throw RegimeError("cube complex action needs infinite factors");
  if (v == w)
    return ctx.identity();

  auto base = template_vertex(ctx, n);
  auto sigma =
    ctx.from_perm(matching(ctx, w, base).inverse() * matching(ctx, v, base));
  if (act_vertex(ctx, sigma, v) != w)
    throw Error("transporter failed verification");
  return sigma;
}

CubeBall cube_ball(PvContext const &ctx, std::size_t radius,
                   std::int64_t payload_bound)
{
  std::vector<Point> universe{Point::base()};
  for (auto side : {Side::g, Side::h}) {
    auto const &grp = side == Side::g ? ctx.g() : ctx.h();
    for (auto const &x : grp.ball(payload_bound))
      if (!grp.is_identity(x))
        universe.push_back(Point::unchecked(side, x));
  }
  std::sort(universe.begin(), universe.end());

  CubeBall ball;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> subsets{{}};
  // Breadth first by subset size; children extend by larger indices only,
  // so each subset is produced once.
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    auto const t = subsets[k];
    std::vector<Point> pts;
    for (auto i : t)
      pts.push_back(universe[i]);
    index.emplace(t, ball.vertices.size());
    ball.vertices.push_back(CubeVertex::toggle(std::move(pts)));
    if (t.size() == radius)
      continue;
    for (auto i = t.empty() ? 0 : t.back() + 1; i < universe.size(); ++i) {
      auto child = t;
      child.push_back(i);
      subsets.push_back(std::move(child));
    }
  }
  for (auto const &[t, id] : index) {
    if (t.size() == radius)
      continue;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (std::binary_search(t.begin(), t.end(), i))
        continue;
      auto child = t;
      child.insert(std::lower_bound(child.begin(), child.end(), i), i);
      ball.edges.emplace_back(id, index.at(child));
    }
  }
  std::sort(ball.edges.begin(), ball.edges.end());
  return ball;
}

std::vector<std::pair<CubeVertex, CubeVertex>>
adjacent_fixed_pairs(CubeBall const &ball)
{
  std::vector<std::pair<CubeVertex, CubeVertex>> found;
  for (auto [i, j] : ball.edges) {
    auto const &a = ball.vertices[i];
    auto const &b = ball.vertices[j];
    if (fixed_by_g(a) && fixed_by_h(b))
      found.emplace_back(a, b);
    if (fixed_by_g(b) && fixed_by_h(a))
      found.emplace_back(b, a);
  }
  return found;
}

Word growth_witness(Element const &g, Element const &h, std::size_t length)
{
  Word w;
  for (std::size_t i = length; i-- > 0;) {
    if (i % 2 == 0)
      w.push_back(HLetter{h});
    else
      w.push_back(GLetter{g});
  }
  return w;
}

std::string format_vertex(CubeVertex const &v, PointFormat const &fmt)
{
  std::string out = "{";
  bool first = true;
  for (auto const &p : v.toggled()) {
    if (!first)
      out += ' ';
    out += fmt.format(p);
    first = false;
  }
  return out + "}";
}

CubeVertex parse_vertex(std::string_view text, PointFormat const &fmt)
{
  auto open = text.find_first_not_of(" \t");
  if (open == std::string_view::npos || text[open] != '{')
    throw ParseError("vertex literal must start with '{'", open == text.npos ? 0 : open);
  auto close = text.find('}', open);
  if (close == std::string_view::npos)
    throw ParseError("missing '}' in vertex literal", text.size());
  if (text.find_first_not_of(" \t", close + 1) != std::string_view::npos)
    throw ParseError("trailing text after vertex literal", close + 1);

  std::vector<Point> pts;
  std::size_t pos = open + 1;
  while (pos < close) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',') {
      ++pos;
      continue;
    }
    auto end = text.find_first_of(" \t}", pos);
    try {
      pts.push_back(fmt.parse(text.substr(pos, end - pos)));
    } catch (ParseError const &e) {
      throw ParseError(e.message(), pos + e.position());
    }
    pos = end;
  }
  auto n = pts.size();
  auto v = CubeVertex::toggle(std::move(pts));
  if (v.removed().size() + v.added().size() != n)
    throw ParseError("repeated point in vertex literal", open);
  return v;
}

std::string to_dot(CubeBall const &ball, PointFormat const &fmt)
{
  std::string out = "graph cube {\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    auto const &v = ball.vertices[i];
    out += "  v" + std::to_string(i) + " [label=\"" + format_vertex(v, fmt) +
           "\\ns=" + std::to_string(s_invariant(v)) + "\"];\n";
  }
  for (auto [a, b] : ball.edges)
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  return out + "}\n";
}

std::string to_jsonl(CubeBall const &ball, PointFormat const &fmt)
{
  std::string out;
  for (auto const &v : ball.vertices) {
    nlohmann::json rec;
    rec["removed"] = nlohmann::json::array();
    rec["added"] = nlohmann::json::array();
    for (auto const &p : v.removed())
      rec["removed"].push_back(fmt.format(p));
    for (auto const &p : v.added())
      rec["added"].push_back(fmt.format(p));
    rec["s"] = s_invariant(v);
    out += rec.dump() + "\n";
  }
  return out;
}

} // namespace glued
