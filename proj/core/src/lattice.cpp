#include "nlk3/lattice.hpp"

#include <algorithm>
#include <utility>

namespace nlk3 {

GenusContext::GenusContext(Int genus) : g(std::move(genus)) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
  ell_sq = 2 * g - 2;
  evenmod = 4 * g - 4;
}

Int discriminant(const NLPair& p) { return p.d * p.d - p.ctx.ell_sq * p.n; }

bool is_valid_divisor(const NLPair& p) {
  return is_even(p.n) && discriminant(p) > 0;
}

CanonicalDivisor::CanonicalDivisor(GenusContext ctx, Int delta, Int r)
    : ctx_(std::move(ctx)), delta_(std::move(delta)), r_(std::move(r)) {
  if (delta_ <= 0)
    throw InvalidDivisor(InvalidDivisor::Reason::nonpositive_discriminant,
                         "canonical discriminant must be positive, got " +
                             delta_.str());
  if (r_ < 0 || r_ > ctx_.g - 1)
    throw DomainError("folded residue must lie in [0, g-1], got " + r_.str() +
                      " at genus " + ctx_.g.str());
  if (mod_floor(r_ * r_ - delta_, ctx_.evenmod) != 0)
    throw InvalidDivisor(InvalidDivisor::Reason::odd_self_intersection,
                         "residue " + r_.str() + " does not square to " +
                             delta_.str() + " mod " + ctx_.evenmod.str() +
                             "; no even class has these invariants");
}

Int CanonicalDivisor::rep_n() const {
  // r^2 = delta (mod 4g-4) makes this an even integer.
  return (r_ * r_ - delta_) / ctx_.ell_sq;
}

NLPair CanonicalDivisor::standard_rep() const {
  return NLPair(ctx_, rep_d(), rep_n());
}

std::string CanonicalDivisor::label() const {
  return "D_{" + rep_d().str() + "," + rep_n().str() + "}";
}

bool operator==(const CanonicalDivisor& a, const CanonicalDivisor& b) {
  return a.ctx_ == b.ctx_ && a.delta_ == b.delta_ && a.r_ == b.r_;
}

bool operator<(const CanonicalDivisor& a, const CanonicalDivisor& b) {
  if (a.ctx_.g != b.ctx_.g) return a.ctx_.g < b.ctx_.g;
  if (a.delta_ != b.delta_) return a.delta_ < b.delta_;
  return a.r_ < b.r_;
}

CanonicalDivisor canonicalize(const NLPair& p) {
  if (!is_even(p.n))
    throw InvalidDivisor(InvalidDivisor::Reason::odd_self_intersection,
                         "self-intersection must be even, got " + p.n.str());
  Int delta = discriminant(p);
  if (delta <= 0)
    throw InvalidDivisor(InvalidDivisor::Reason::nonpositive_discriminant,
                         "discriminant must be positive, got " + delta.str() +
                             " for (d, n) = (" + p.d.str() + ", " + p.n.str() +
                             ") at genus " + p.ctx.g.str());
  // Fold d into [0, g-1]: first reduce mod 2g-2, then identify s with 2g-2-s
  // (the reflection beta -> -beta + (d'/(g-1)) L preserves the divisor).
  Int s = mod_floor(p.d, p.ctx.ell_sq);
  Int t = p.ctx.ell_sq - s;
  Int r = s <= t ? s : t;
  return CanonicalDivisor(p.ctx, delta, r);
}

bool equivalent(const NLPair& a, const NLPair& b) {
  if (a.ctx.g != b.ctx.g)
    throw GenusMismatch("cannot compare divisors at genus " + a.ctx.g.str() +
                        " and " + b.ctx.g.str());
  return canonicalize(a) == canonicalize(b);
}

namespace {

void require_same_genus(const CanonicalDivisor& host, const NLPair& target) {
  if (host.ctx().g != target.ctx.g)
    throw GenusMismatch("host divisor at genus " + host.ctx().g.str() +
                        ", target class at genus " + target.ctx.g.str());
}

void require_bound(const Int& bound) {
  if (bound < 1) throw DomainError("search bound must be >= 1, got " + bound.str());
}

void sort_representations(std::vector<Representation>& reps) {
  std::sort(reps.begin(), reps.end(),
            [](const Representation& a, const Representation& b) {
              Int aa = abs(a.y), ab = abs(b.y);
              if (aa != ab) return aa < ab;
              if (a.y != b.y) return a.y < b.y;
              return a.x < b.x;
            });
}

bool solves(const NLPair& target, const Int& m, const Int& dp, const Int& np,
            const Int& x, const Int& y) {
  // v = xL + y beta':  v.L = x(2g-2) + y d',  v^2 = x^2(2g-2) + 2xy d' + y^2 n'.
  if (x * m + y * dp != target.d) return false;
  Int q = x * x * m + 2 * x * y * dp + y * y * np;
  return q == target.n;
}

}  // namespace

std::vector<Representation> represent(const CanonicalDivisor& host,
                                      const NLPair& target, const Int& bound) {
  require_same_genus(host, target);
  require_bound(bound);
  const Int m = host.ctx().ell_sq;
  const Int dp = host.rep_d();
  const Int np = host.rep_n();
  std::vector<Representation> out;
  // The linear equation fixes x for each y; only the quadratic one needs
  // checking afterwards.
  for (Int y = -bound; y <= bound; ++y) {
    Int rem = target.d - y * dp;
    if (rem % m != 0) continue;
    Int x = rem / m;
    if (abs(x) > bound) continue;
    if (solves(target, m, dp, np, x, y)) out.push_back({x, y});
  }
  sort_representations(out);
  return out;
}

std::vector<Representation> represent_brute_force(const CanonicalDivisor& host,
                                                  const NLPair& target,
                                                  const Int& bound) {
  require_same_genus(host, target);
  require_bound(bound);
  const Int m = host.ctx().ell_sq;
  const Int dp = host.rep_d();
  const Int np = host.rep_n();
  std::vector<Representation> out;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y)
      if (solves(target, m, dp, np, x, y)) out.push_back({x, y});
  sort_representations(out);
  return out;
}

}  // namespace nlk3
