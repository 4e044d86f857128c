#include "glued/lef.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "glued/error.hpp"

namespace glued
{

namespace
{

std::mutex registry_mutex;

std::map<GroupKind, QuotientProvider> &registry()
{
  static std::map<GroupKind, QuotientProvider> providers;
  return providers;
}

std::int64_t mod(std::int64_t x, std::int64_t m)
{
  auto r = x % m;
  return r < 0 ? r + m : r;
}

void verify_quotient(FiniteQuotient const &q, std::int64_t radius)
{
  auto const &src = *q.source;
  auto const &dst = *q.target;
  if (!dst.is_finite())
    throw PreconditionError("quotient target must be finite");

  std::mt19937_64 rng(0x9d2c5680u);
  for (int i = 0; i < 200; ++i) {
    auto x = src.random(rng, radius);
    auto y = src.random(rng, radius);
    if (q(src.multiply(x, y)) != dst.multiply(q(x), q(y)))
      throw PreconditionError("quotient map is not a homomorphism on (" +
                              src.format(x) + ", " + src.format(y) + ")");
  }
  std::set<Element> seen;
  for (auto const &x : src.ball(radius)) {
    auto y = q(x);
    if (!dst.contains(y))
      throw PreconditionError("quotient map leaves its target at " +
                              src.format(x));
    if (!seen.insert(std::move(y)).second)
      throw PreconditionError("quotient map is not injective on the ball of "
                              "radius " + std::to_string(radius));
  }
}

} // namespace

void register_quotient_provider(GroupKind kind, QuotientProvider provider)
{
  std::lock_guard lock(registry_mutex);
  registry()[kind] = std::move(provider);
}

FiniteQuotient build_quotient(GroupHandle const &group, std::int64_t radius,
                              std::optional<std::uint64_t> modulus)
{
  if (radius < 0)
    throw PreconditionError("quotient radius must be non-negative");

  QuotientProvider provider;
  {
    std::lock_guard lock(registry_mutex);
    if (auto it = registry().find(group->kind()); it != registry().end())
      provider = it->second;
  }

  FiniteQuotient q;
  if (provider) {
    q = provider(group, radius, modulus);
  } else if (group->is_finite()) {
    q = {group, group, [](Element const &x) { return x; },
         std::numeric_limits<std::int64_t>::max()};
  } else if (group->kind() == GroupKind::integers ||
             group->kind() == GroupKind::lattice) {
    auto m = static_cast<std::int64_t>(
      modulus.value_or(static_cast<std::uint64_t>(2 * radius + 1)));
    if (m < 2 * radius + 1)
      throw PreconditionError("modulus " + std::to_string(m) +
                              " is too small to be injective on radius " +
                              std::to_string(radius));
    auto d = group->identity().size();
    q.source = group;
    q.target = make_cyclic_power(static_cast<std::uint64_t>(m), d);
    q.injectivity_radius = radius;
    q.proj = [m, d](Element const &x) {
      std::int64_t idx = 0;
      for (std::size_t k = 0; k < d; ++k)
        idx = idx * m + mod(x[k], m);
      return Element{idx};
    };
  } else {
    throw PreconditionError("no finite quotient provider for " + group->name());
  }
  verify_quotient(q, std::min(radius, q.injectivity_radius));
  return q;
}

bool in_window(PvContext const &ctx, PvElement const &sigma, std::int64_t n)
{
  bool mixed = ctx.regime() == Regime::mixed;
  if (ctx.g().length(sigma.g) > n)
    return false;
  if (mixed ? !ctx.h().is_identity(sigma.h) : ctx.h().length(sigma.h) > n)
    return false;
  for (auto const &[p, q] : sigma.residual.mapping()) {
    if (p.side() == Side::g && ctx.g().length(p.payload()) > n)
      return false;
    if (p.side() == Side::h && !mixed && ctx.h().length(p.payload()) > n)
      return false;
  }
  return ctx.allows_odd_residual() || sigma.residual.parity() == Parity::even;
}

std::vector<Point> window_points(PvContext const &ctx, std::int64_t n)
{
  std::vector<Point> pts{Point::base()};
  for (auto const &x : ctx.g().ball(n))
    if (!ctx.g().is_identity(x))
      pts.push_back(Point::unchecked(Side::g, x));
  auto hs = ctx.regime() == Regime::mixed ? ctx.h().elements() : ctx.h().ball(n);
  for (auto const &y : hs)
    if (!ctx.h().is_identity(y))
      pts.push_back(Point::unchecked(Side::h, y));
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::uint64_t default_budget()
{
  if (auto const *env = std::getenv("PV_BUDGET")) {
    char *end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return 10'000'000;
}

LefApprox::LefApprox(PvContext ctx, std::int64_t n, FiniteQuotient qg,
                     FiniteQuotient qh)
  : _ctx(std::move(ctx)), _n(n), _qg(std::move(qg)), _qh(std::move(qh)),
    _union(_qg.target, _qh.target)
{
  if (n < 0)
    throw PreconditionError("window index must be non-negative");
  if (_ctx.regime() == Regime::both_finite)
    throw RegimeError("finite glued products need no approximation");
  if (_qg.injectivity_radius < 4 * n)
    throw PreconditionError("G quotient must be injective on B(4n)");
  if (_ctx.regime() == Regime::mixed) {
    for (auto const &y : _ctx.h().elements())
      if (_qh(y) != y)
        throw PreconditionError("mixed regime keeps H unchanged");
  } else if (_qh.injectivity_radius < 4 * n) {
    throw PreconditionError("H quotient must be injective on B(4n)");
  }

  _translations.resize(_union.degree(), DensePerm(_union.degree()));
  for (std::uint32_t i = 1; i < _union.degree(); ++i) {
    auto const &p = _union.point_at(i);
    _translations[i] = _union.translation(p.side(), p.payload());
  }
  for (auto w : {n, 2 * n})
    _windows.emplace(w, window(w));
}

std::shared_ptr<LefApprox::Window const> LefApprox::window(std::int64_t w) const
{
  if (auto it = _windows.find(w); it != _windows.end())
    return it->second;
  auto win = std::make_shared<Window>();
  win->gs = _ctx.g().ball(w);
  if (_ctx.regime() == Regime::mixed)
    win->hs = {_ctx.h().identity()};
  else
    win->hs = _ctx.h().ball(w);
  win->points = window_points(_ctx, w);
  return win;
}

LefApprox LefApprox::standard(PvContext const &ctx, std::int64_t n,
                              std::optional<std::uint64_t> modulus)
{
  return LefApprox(ctx, n, build_quotient(ctx.g_handle(), 4 * n, modulus),
                   build_quotient(ctx.h_handle(), 4 * n, modulus));
}

Point LefApprox::project(Point const &p) const
{
  switch (p.side()) {
  case Side::base:
    return p;
  case Side::g:
    return Point::on(Side::g, *_qg.target, _qg(p.payload()));
  case Side::h:
    return Point::on(Side::h, *_qh.target, _qh(p.payload()));
  }
  return p;
}

std::uint32_t LefApprox::project_index(Point const &p) const
{
  return _union.index_of(project(p));
}

DensePerm LefApprox::translation(Side side, Element const &x) const
{
  auto const &target = side == Side::g ? _union.g() : _union.h();
  auto i = _union.index_of(Point::on(side, target, quotient(side)(x)));
  return i == 0 ? DensePerm(_union.degree()) : _translations[i];
}

DensePerm LefApprox::phi(PvElement const &sigma) const
{
  if (!in_window(_ctx, sigma, 2 * _n))
    throw PreconditionError("element is outside the window F_2n");
  DensePerm push(_union.degree());
  if (!sigma.residual.is_identity()) {
    std::vector<std::uint32_t> images(_union.degree());
    std::iota(images.begin(), images.end(), 0u);
    for (auto const &[y, ay] : sigma.residual.mapping())
      images[project_index(y)] = project_index(ay);
    push = DensePerm(std::move(images));
  }
  if (!_ctx.h().is_identity(sigma.h))
    push = translation(Side::h, sigma.h) * push;
  if (!_ctx.g().is_identity(sigma.g))
    push = translation(Side::g, sigma.g) * push;
  return push;
}

namespace
{

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t perm_count(std::size_t k, bool odd_allowed)
{
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i)
    r = saturating_mul(r, i);
  return odd_allowed || k < 2 ? r : r / 2;
}

// All permutations of `pts` (even ones only unless odd_allowed).
std::vector<FinPerm> residuals(std::vector<Point> const &pts, bool odd_allowed)
{
  std::vector<FinPerm> out;
  std::vector<std::uint32_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0u);
  do {
    if (!odd_allowed && DensePerm(idx).parity() == Parity::odd)
      continue;
    FinPerm::Mapping pairs;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (idx[i] != i)
        pairs.emplace_back(pts[i], pts[idx[i]]);
    out.push_back(FinPerm::from_mapping(std::move(pairs)));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

} // namespace

std::uint64_t LefApprox::window_size(std::int64_t w) const
{
  auto win = window(w);
  return saturating_mul(saturating_mul(win->gs.size(), win->hs.size()),
                        perm_count(win->points.size(), _ctx.allows_odd_residual()));
}

std::vector<PvElement> LefApprox::enumerate_window(std::int64_t w,
                                                   std::uint64_t cap) const
{
  auto size = window_size(w);
  if (size > cap)
    throw BudgetError("window F_" + std::to_string(w) + " has " +
                      std::to_string(size) + " elements, above cap " +
                      std::to_string(cap));
  auto win = window(w);
  auto as = residuals(win->points, _ctx.allows_odd_residual());
  std::vector<PvElement> out;
  out.reserve(size);
  for (auto const &g : win->gs)
    for (auto const &h : win->hs)
      for (auto const &a : as)
        out.push_back({g, h, a});
  return out;
}

PvElement LefApprox::random_window_element(std::mt19937_64 &rng,
                                           std::int64_t w) const
{
  auto win = window(w);
  auto const &gs = win->gs;
  auto const &hs = win->hs;
  auto const &pts = win->points;
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto g = gs[pick(gs.size())];
  auto h = hs[pick(hs.size())];

  std::vector<std::uint32_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0u);
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[pick(i)]);
  // Swapping two images is a bijection between odd and even arrangements.
  if (!_ctx.allows_odd_residual() && idx.size() >= 2 &&
      DensePerm(idx).parity() == Parity::odd)
    std::swap(idx[0], idx[1]);

  FinPerm::Mapping pairs;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (idx[i] != i)
      pairs.emplace_back(pts[i], pts[idx[i]]);
  return {std::move(g), std::move(h), FinPerm::from_mapping(std::move(pairs))};
}

CheckMode CheckMode::parse(std::string_view text)
{
  if (text == "exhaustive")
    return exhaustive();
  if (text.rfind("sample:", 0) == 0) {
    auto digits = text.substr(7);
    std::uint64_t k = 0;
    if (digits.empty())
      throw ParseError("sample count missing", 7);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9')
        throw ParseError("sample count must be a decimal integer", 7 + i);
      k = k * 10 + static_cast<std::uint64_t>(digits[i] - '0');
    }
    return sample(k);
  }
  throw ParseError("mode must be 'exhaustive' or 'sample:K'", 0);
}

std::string CheckMode::str() const
{
  return kind == Kind::exhaustive ? "exhaustive"
                                  : "sample:" + std::to_string(samples);
}

void LefReport::fail(std::string what)
{
  ++failure_count;
  if (failures.size() < 10)
    failures.push_back(std::move(what));
}

nlohmann::json LefReport::to_json() const
{
  return {{"check", check},
          {"mode", mode},
          {"pairs_checked", pairs_checked},
          {"failure_count", failure_count},
          {"failures", failures},
          {"wall_time", wall_time}};
}

namespace
{

class Stopwatch
{
public:
  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         _start).count();
  }

private:
  std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
};

std::string describe_pair(PvContext const &ctx, PvElement const &a,
                          PvElement const &b)
{
  return "s1=[" + ctx.format(a) + "] s2=[" + ctx.format(b) + "]";
}

// A quotient that is not injective enough can make Phi fail to be a
// permutation; the checks report that instead of throwing.
std::optional<DensePerm> try_phi(LefApprox const &approx, PvElement const &s)
{
  try {
    return approx.phi(s);
  } catch (Error const &) {
    return std::nullopt;
  }
}

// Runs `body` on every pair of F_n (exhaustive) or on sampled pairs.
template<typename Body>
void for_window_pairs(LefApprox const &approx, CheckMode mode,
                      std::uint64_t seed, std::uint64_t budget,
                      LefReport &report, Body &&body)
{
  auto n = approx.n();
  if (mode.kind == CheckMode::Kind::exhaustive) {
    auto size = approx.window_size(n);
    if (saturating_mul(size, size) > budget)
      throw BudgetError("exhaustive check needs " + std::to_string(size) +
                        "^2 pairs, above budget " + std::to_string(budget));
    auto window = approx.enumerate_window(n, budget);
    for (std::size_t i = 0; i < window.size(); ++i)
      for (std::size_t j = 0; j < window.size(); ++j) {
        body(i, window[i], j, window[j]);
        ++report.pairs_checked;
      }
  } else {
    if (mode.samples > budget)
      throw BudgetError("sample count above budget " + std::to_string(budget));
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < mode.samples; ++k) {
      auto a = approx.random_window_element(rng, n);
      auto b = approx.random_window_element(rng, n);
      body(std::size_t(-1), a, std::size_t(-1), b);
      ++report.pairs_checked;
    }
  }
}

} // namespace

LefReport check_multiplicativity(LefApprox const &approx, CheckMode mode,
                                 std::uint64_t seed, std::uint64_t budget)
{
  Stopwatch clock;
  LefReport report{"multiplicativity", mode.str()};
  auto const &ctx = approx.context();
  std::vector<std::optional<DensePerm>> cache;
  if (mode.kind == CheckMode::Kind::exhaustive &&
      approx.window_size(approx.n()) <= budget)
    for (auto const &s : approx.enumerate_window(approx.n(), budget))
      cache.push_back(try_phi(approx, s));
  auto phi_of = [&](std::size_t i, PvElement const &s) {
    return i < cache.size() ? cache[i] : try_phi(approx, s);
  };

  for_window_pairs(approx, mode, seed, budget, report,
                   [&](std::size_t i, PvElement const &a, std::size_t j,
                       PvElement const &b) {
    auto product = ctx.multiply(a, b);
    if (!in_window(ctx, product, 2 * approx.n())) {
      report.fail(describe_pair(ctx, a, b) + ": product leaves F_2n");
      return;
    }
    auto pa = phi_of(i, a);
    auto pb = phi_of(j, b);
    auto pab = try_phi(approx, product);
    if (!pa || !pb || !pab) {
      report.fail(describe_pair(ctx, a, b) + ": Phi is not a permutation");
      return;
    }
    if (*pab != *pa * *pb)
      report.fail(describe_pair(ctx, a, b));
  });
  report.wall_time = clock.seconds();
  return report;
}

LefReport check_window_closure(LefApprox const &approx, CheckMode mode,
                               std::uint64_t seed, std::uint64_t budget)
{
  Stopwatch clock;
  LefReport report{"window_closure", mode.str()};
  auto const &ctx = approx.context();
  for_window_pairs(approx, mode, seed, budget, report,
                   [&](std::size_t, PvElement const &a, std::size_t,
                       PvElement const &b) {
    if (!in_window(ctx, ctx.multiply(a, b), 2 * approx.n()))
      report.fail(describe_pair(ctx, a, b));
  });
  report.wall_time = clock.seconds();
  return report;
}

LefReport check_injectivity(LefApprox const &approx, CheckMode mode,
                            std::uint64_t seed, std::uint64_t budget)
{
  Stopwatch clock;
  LefReport report{"injectivity", mode.str()};
  auto const &ctx = approx.context();
  auto w = 2 * approx.n();

  if (mode.kind == CheckMode::Kind::exhaustive) {
    auto window = approx.enumerate_window(w, budget);
    std::unordered_map<DensePerm, std::size_t> seen;
    seen.reserve(window.size());
    for (std::size_t i = 0; i < window.size(); ++i) {
      auto image = try_phi(approx, window[i]);
      if (!image) {
        report.fail("s=[" + ctx.format(window[i]) + "]: Phi is not a permutation");
        continue;
      }
      auto [it, fresh] = seen.emplace(std::move(*image), i);
      if (!fresh)
        report.fail(describe_pair(ctx, window[it->second], window[i]));
    }
    auto n = static_cast<std::uint64_t>(window.size());
    report.pairs_checked = n * (n - 1) / 2;
  } else {
    if (mode.samples > budget)
      throw BudgetError("sample count above budget " + std::to_string(budget));
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < mode.samples; ++k) {
      auto a = approx.random_window_element(rng, w);
      auto b = approx.random_window_element(rng, w);
      while (b == a)
        b = approx.random_window_element(rng, w);
      auto pa = try_phi(approx, a);
      auto pb = try_phi(approx, b);
      if (!pa || !pb)
        report.fail(describe_pair(ctx, a, b) + ": Phi is not a permutation");
      else if (*pa == *pb)
        report.fail(describe_pair(ctx, a, b));
      ++report.pairs_checked;
    }
  }
  report.wall_time = clock.seconds();
  return report;
}

LefReport check_equivariance(LefApprox const &approx)
{
  Stopwatch clock;
  LefReport report{"equivariance", "exhaustive"};
  auto const &ctx = approx.context();
  auto const &fin = approx.finite();
  auto zs = window_points(ctx, 4 * approx.n());
  for (auto side : {Side::g, Side::h}) {
    auto const &grp = side == Side::g ? ctx.g() : ctx.h();
    auto const &q = approx.quotient(side);
    auto const &target = side == Side::g ? fin.g() : fin.h();
    for (auto const &x : grp.ball(4 * approx.n()))
      for (auto const &z : zs) {
        auto lhs = approx.project(apply_factor(side, grp, x, z));
        auto rhs = apply_factor(side, target, q(x), approx.project(z));
        if (lhs != rhs)
          report.fail(std::string(side == Side::g ? "g=" : "h=") +
                      grp.format(x) + " z=" + ctx.point_format().format(z));
        ++report.pairs_checked;
      }
  }
  report.wall_time = clock.seconds();
  return report;
}

LefReport check_pushforward(LefApprox const &approx, std::uint64_t budget)
{
  Stopwatch clock;
  LefReport report{"pushforward", "exhaustive"};
  auto const &ctx = approx.context();
  auto support = window_points(ctx, 2 * approx.n());
  auto count = perm_count(support.size(), ctx.allows_odd_residual());
  auto ys = window_points(ctx, 4 * approx.n());
  if (saturating_mul(count, ys.size()) > budget)
    throw BudgetError("pushforward check exceeds budget " +
                      std::to_string(budget));

  std::vector<std::uint32_t> projected;
  for (auto const &y : ys)
    projected.push_back(approx.project_index(y));
  for (auto const &a : residuals(support, ctx.allows_odd_residual())) {
    auto image = approx.phi({ctx.g().identity(), ctx.h().identity(), a});
    for (std::size_t k = 0; k < ys.size(); ++k) {
      if (image[projected[k]] != approx.project_index(a(ys[k])))
        report.fail("a=" + a.format(ctx.point_format()) +
                    " y=" + ctx.point_format().format(ys[k]));
      ++report.pairs_checked;
    }
  }
  report.wall_time = clock.seconds();
  return report;
}

LefReport check_point_bijection(LefApprox const &approx)
{
  Stopwatch clock;
  LefReport report{"point_bijection", "exhaustive"};
  auto const &ctx = approx.context();
  std::map<std::uint32_t, Point> seen;
  for (auto const &p : window_points(ctx, 4 * approx.n())) {
    auto [it, fresh] = seen.emplace(approx.project_index(p), p);
    if (!fresh)
      report.fail(ctx.point_format().format(it->second) + " and " +
                  ctx.point_format().format(p) + " share an image");
    ++report.pairs_checked;
  }
  report.wall_time = clock.seconds();
  return report;
}

std::vector<LefReport> lef_mixed(PvContext const &ctx, std::int64_t n,
                                 CheckMode mode, std::uint64_t seed,
                                 std::optional<std::uint64_t> modulus,
                                 std::uint64_t budget)
{
  if (ctx.regime() != Regime::mixed)
    throw RegimeError("mixed LEF check needs G infinite and H finite");
  auto approx = LefApprox::standard(ctx, n, modulus);
  return {check_multiplicativity(approx, mode, seed, budget),
          check_injectivity(approx, mode, seed, budget)};
}

} // namespace glued
