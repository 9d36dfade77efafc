#include "ordcomp/oracle.hpp"

#include <algorithm>

#include "ordcomp/error.hpp"

namespace ordcomp::oracle {

Members naive_upper_bounds(const Poset& p, const Members& a) {
  const std::size_t n = p.size();
  Members out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    bool bound = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] && !p.leq(i, x)) bound = false;
    }
    out[x] = bound;
  }
  return out;
}

Members naive_lower_bounds(const Poset& p, const Members& a) {
  const std::size_t n = p.size();
  Members out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    bool bound = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] && !p.leq(x, i)) bound = false;
    }
    out[x] = bound;
  }
  return out;
}

Members naive_closure(const Poset& p, const Members& a) { return naive_lower_bounds(p, naive_upper_bounds(p, a)); }

Members to_members(Mask m, std::size_t n) {
  Members out(n, false);
  for (std::size_t i = 0; i < n; ++i) out[i] = ((m >> i) & 1U) != 0;
  return out;
}

Mask to_mask(const Members& m) {
  Mask out = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out |= Mask{1} << i;
  }
  return out;
}

namespace {

bool subset_of(Mask a, Mask b) {
  for (std::size_t i = 0; i < 64; ++i) {
    if (((a >> i) & 1U) && !((b >> i) & 1U)) return false;
  }
  return true;
}

int count(Mask m) {
  int c = 0;
  for (std::size_t i = 0; i < 64; ++i) c += static_cast<int>((m >> i) & 1U);
  return c;
}

std::vector<std::size_t> members_list(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((m >> i) & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<Mask> brute_cuts(const Poset& p) {
  const std::size_t n = p.size();
  if (n > kMaxOracleArity) throw Error(Errc::ResourceCap, "oracle limited to arity " + std::to_string(kMaxOracleArity));
  std::vector<Mask> cuts;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const Members a = to_members(s, n);
    if (naive_closure(p, a) == a) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end(), [](Mask a, Mask b) {
    if (count(a) != count(b)) return count(a) < count(b);
    return members_list(a) < members_list(b);
  });
  return cuts;
}

std::size_t brute_bound(const CompletedPoset& c, std::span<const std::size_t> family, Which which) {
  std::vector<std::size_t> bounds;
  for (std::size_t k = 0; k < c.size(); ++k) {
    bool ok = true;
    for (auto f : family) {
      ok = ok && (which == Which::Sup ? subset_of(c.mask(f), c.mask(k)) : subset_of(c.mask(k), c.mask(f)));
    }
    if (ok) bounds.push_back(k);
  }
  for (auto b : bounds) {
    bool extreme = true;
    for (auto o : bounds) {
      extreme = extreme && (which == Which::Sup ? subset_of(c.mask(b), c.mask(o)) : subset_of(c.mask(o), c.mask(b)));
    }
    if (extreme) return b;
  }
  throw Error(Errc::NoBound, "no extreme bound among the listed cuts");
}

std::optional<Mask> brute_solve(const EquationInstance& e, Mask f) {
  const Poset& q = e.quotient().order();
  const Poset& y = e.codomain();
  const auto& rep = e.quotient().representatives();
  std::optional<Mask> found;
  for (Mask a : brute_cuts(q)) {
    Members img(y.size(), false);
    for (std::size_t u = 0; u < q.size(); ++u) {
      if ((a >> u) & 1U) img[e.map()(rep[u])] = true;
    }
    if (to_mask(naive_closure(y, img)) != f) continue;
    if (found) throw Error(Errc::MultipleSolutions, "two distinct cuts solve the equation");
    found = a;
  }
  return found;
}

}  // namespace ordcomp::oracle
