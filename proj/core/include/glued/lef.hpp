#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dense_perm.hpp"
#include "finite_pv.hpp"
#include "group.hpp"
#include "pv.hpp"

namespace glued
{

// A homomorphism onto a finite group, injective on the ball of
// `injectivity_radius` in the source.
struct FiniteQuotient
{
  GroupHandle source;
  GroupHandle target;
  std::function<Element(Element const &)> proj;
  std::int64_t injectivity_radius = 0;

  Element operator()(Element const &x) const { return proj(x); }
};

using QuotientProvider = std::function<FiniteQuotient(
  GroupHandle const &, std::int64_t radius, std::optional<std::uint64_t> modulus)>;

/// Installs a provider for a group kind without a built-in one (free
/// groups). Replaces any earlier registration for that kind.
void register_quotient_provider(GroupKind kind, QuotientProvider provider);

/// Z -> Z/m and Z^d -> (Z/m)^d with m = modulus or 2 radius + 1, identity
/// on finite groups, registered providers otherwise. The result is checked:
/// homomorphism on sampled pairs, injective on the whole ball.
FiniteQuotient build_quotient(GroupHandle const &group, std::int64_t radius,
                              std::optional<std::uint64_t> modulus = {});

/// sigma in F_n: factor parts of length <= n, residual supported in C_n and
/// even unless the context admits odd residuals.
bool in_window(PvContext const &ctx, PvElement const &sigma, std::int64_t n);

/// C_n as a sorted point list: ball_G(n) and ball_H(n), or all of H in the
/// mixed regime.
std::vector<Point> window_points(PvContext const &ctx, std::int64_t n);

/// Pair-check cap: PV_BUDGET when set, 10^7 otherwise.
std::uint64_t default_budget();

// The map Phi_n from F_2n into the finite glued product of the quotients.
class LefApprox
{
public:
  /// Quotients must be injective on B(4n); in the mixed regime the H
  /// quotient must be the identity of H.
  LefApprox(PvContext ctx, std::int64_t n, FiniteQuotient qg, FiniteQuotient qh);

  /// Default quotients of radius 4n; `modulus` overrides m for Z and Z^d.
  static LefApprox standard(PvContext const &ctx, std::int64_t n,
                            std::optional<std::uint64_t> modulus = {});

  PvContext const &context() const { return _ctx; }
  std::int64_t n() const { return _n; }
  FiniteUnion const &finite() const { return _union; }
  FiniteQuotient const &quotient(Side side) const
  { return side == Side::h ? _qh : _qg; }

  /// The set map pi between the pointed unions.
  Point project(Point const &p) const;
  std::uint32_t project_index(Point const &p) const;

  /// Translation by pi(x) on the finite pointed union.
  DensePerm translation(Side side, Element const &x) const;
  /// Throws PreconditionError unless sigma lies in F_2n.
  DensePerm phi(PvElement const &sigma) const;

  /// Every element of F_w. Throws BudgetError above `cap` elements.
  std::vector<PvElement> enumerate_window(std::int64_t w,
                                          std::uint64_t cap) const;
  std::uint64_t window_size(std::int64_t w) const;
  /// Uniform element of F_w.
  PvElement random_window_element(std::mt19937_64 &rng, std::int64_t w) const;

private:
  struct Window
  {
    std::vector<Element> gs;
    std::vector<Element> hs;
    std::vector<Point> points;
  };
  std::shared_ptr<Window const> window(std::int64_t w) const;

  PvContext _ctx;
  std::int64_t _n;
  FiniteQuotient _qg;
  FiniteQuotient _qh;
  FiniteUnion _union;
  // translation by the element at each finite point index; 0 is unused
  std::vector<DensePerm> _translations;
  std::map<std::int64_t, std::shared_ptr<Window const>> _windows;
};

struct CheckMode
{
  enum class Kind
  {
    exhaustive,
    sample
  };
  Kind kind = Kind::exhaustive;
  std::uint64_t samples = 0;

  static CheckMode exhaustive() { return {}; }
  static CheckMode sample(std::uint64_t k) { return {Kind::sample, k}; }
  /// "exhaustive" or "sample:K".
  static CheckMode parse(std::string_view text);
  std::string str() const;
};

struct LefReport
{
  LefReport() = default;
  LefReport(std::string check_name, std::string mode_name)
    : check(std::move(check_name)), mode(std::move(mode_name))
  {}

  std::string check;
  std::string mode;
  std::uint64_t pairs_checked = 0;
  std::uint64_t failure_count = 0;
  /// The first few counterexamples, verbatim.
  std::vector<std::string> failures;
  double wall_time = 0;

  bool ok() const { return failure_count == 0; }
  void fail(std::string what);
  nlohmann::json to_json() const;
};

/// Phi(s1 s2) = Phi(s1) Phi(s2) over pairs of F_n; a product leaving F_2n
/// counts as a failure. Exhaustive mode needs |F_n|^2 <= budget.
LefReport check_multiplicativity(LefApprox const &approx, CheckMode mode,
                                 std::uint64_t seed = 0,
                                 std::uint64_t budget = default_budget());

/// Phi(s) = Phi(s') only for s = s' over F_2n. Exhaustive mode hashes every
/// image, covering all pairs in one pass, and needs |F_2n| <= budget.
LefReport check_injectivity(LefApprox const &approx, CheckMode mode,
                            std::uint64_t seed = 0,
                            std::uint64_t budget = default_budget());

/// F_n F_n inside F_2n.
LefReport check_window_closure(LefApprox const &approx, CheckMode mode,
                               std::uint64_t seed = 0,
                               std::uint64_t budget = default_budget());

/// pi(x z) = pi(x) pi(z) for x in B(4n) of either factor and z in C_4n.
LefReport check_equivariance(LefApprox const &approx);

/// Phi(a)(pi(y)) = pi(a(y)) for every residual a of F_2n with trivial
/// factor parts and every y in C_4n.
LefReport check_pushforward(LefApprox const &approx,
                            std::uint64_t budget = default_budget());

/// pi restricted to C_4n is injective.
LefReport check_point_bijection(LefApprox const &approx);

/// Multiplicativity and injectivity for G infinite and H finite.
std::vector<LefReport> lef_mixed(PvContext const &ctx, std::int64_t n,
                                 CheckMode mode, std::uint64_t seed = 0,
                                 std::optional<std::uint64_t> modulus = {},
                                 std::uint64_t budget = default_budget());

} // namespace glued
