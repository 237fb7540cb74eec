#include "higgsmot/residues.hpp"

#include <algorithm>
#include <numeric>

#include "higgsmot/detail/memo.hpp"
#include "higgsmot/detail/parallel.hpp"
#include "higgsmot/errors.hpp"

namespace higgsmot {

namespace {

Exponent l_exponent(int k) {
  Exponent e{};
  e[kU] = k;
  e[kV] = k;
  return e;
}

Exponent z_exponent(int i) { return unit_exponent(z_index(static_cast<std::size_t>(i))); }

// 1 - L^k x^e as a polynomial.
LaurentPoly one_minus(std::size_t nvars, const Exponent& e) {
  return LaurentPoly::constant(nvars, 1) - LaurentPoly::monomial(nvars, e);
}

detail::MemoCache<std::pair<int, int>, MultiRational>& l_mot_cache() {
  static detail::MemoCache<std::pair<int, int>, MultiRational> cache;
  return cache;
}

detail::MemoCache<std::pair<int, std::vector<int>>, RationalFunction>& res_cache() {
  static detail::MemoCache<std::pair<int, std::vector<int>>, RationalFunction> cache;
  return cache;
}

MultiRational compute_l_mot(const CurveModel& c, int n) {
  const auto nv = static_cast<std::size_t>(2 + n);
  // Memoized normalized zeta factors, indexed by the ordered pair (a, b)
  // standing for z_a / z_b.
  std::vector<RationalFunction> zeta_tilde(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto slot = [n](int a, int b) { return static_cast<std::size_t>(a * (n + 1) + b); };
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) zeta_tilde[slot(a, b)] = c.zeta_tilde_at_monomial(nv, z_exponent(a) - z_exponent(b));
    }
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    perms.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  const std::vector<RationalFunction> terms = detail::parallel_map(perms.size(), [&](std::size_t k) {
    const auto& s = perms[k];
    auto at = [&s](int i) { return s[static_cast<std::size_t>(i - 1)]; };
    RationalFunction term = RationalFunction::inverse_one_minus(nv, z_exponent(at(1)));
    for (int i = 1; i < n; ++i) {
      term *= RationalFunction::inverse_one_minus(nv, l_exponent(1) + z_exponent(at(i + 1)) - z_exponent(at(i)));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) term *= zeta_tilde[slot(at(i), at(j))];
    }
    return term;
  });

  RationalFunction result = RationalFunction::sum(terms);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      result *= c.inverse_zeta_tilde_at_monomial(nv, z_exponent(i) - z_exponent(j));
    }
  }
  return result;
}

// z_i -> L^{1-i} z^{b(i)} into (u, v, z).
MonomialMap lambda_substitution(const BlockData& bd) {
  MonomialMap map{kSeriesVars, {}};
  map.images.assign(static_cast<std::size_t>(2 + bd.n), Exponent{});
  map.images[kU] = unit_exponent(kU);
  map.images[kV] = unit_exponent(kV);
  for (int i = 1; i <= bd.n; ++i) {
    Exponent e = l_exponent(1 - i);
    e[kZ] = bd.block[static_cast<std::size_t>(i - 1)];
    map.images[z_index(static_cast<std::size_t>(i))] = e;
  }
  return map;
}

bool is_block_start(const BlockData& bd, int j) {
  return std::find(bd.prefix.begin(), bd.prefix.end(), j) != bd.prefix.end();
}

RationalFunction compute_res_lambda(const CurveModel& c, const Partition& lambda) {
  if (lambda.empty()) return RationalFunction::constant(kSeriesVars, 1);
  const BlockData bd = block_data(lambda);
  const auto nv = static_cast<std::size_t>(2 + bd.n);
  RationalFunction f = l_mot(c, bd.n);
  for (int j = 1; j < bd.n; ++j) {
    if (is_block_start(bd, j)) continue;
    f *= RationalFunction(one_minus(nv, l_exponent(1) + z_exponent(j + 1) - z_exponent(j)));
  }
  RationalFunction out;
  try {
    out = f.substitute(lambda_substitution(bd));
  } catch (const PoleAtSubstitution&) {
    throw NonInvertibleQAtZero("Q_lambda vanishes identically for " + lambda.to_string());
  }
  if (z_fraction(out).shift < 0) throw NonInvertibleQAtZero("Q_lambda(0) is not invertible for " + lambda.to_string());
  return out;
}

}  // namespace

RationalFunction j_mot_function(const CurveModel& c, const Partition& lambda) {
  RationalFunction f = RationalFunction::constant(kSeriesVars, 1);
  for (int j = 1; j <= lambda.length(); ++j) {
    for (int i = 1; i <= lambda.row(j); ++i) {
      const ArmLeg al = arm_leg(lambda, i, j);
      f *= zeta_star(c, 1 + al.leg, al.arm);
    }
  }
  return f;
}

SeriesZ j_mot(const CurveModel& c, const Partition& lambda, int truncation) {
  return expand_in_z(j_mot_function(c, lambda), truncation);
}

MultiRational l_mot(const CurveModel& c, int n) {
  if (n < 1) throw InvalidArgument("l_mot: n must be positive");
  if (static_cast<std::size_t>(2 + n) > kMaxVars) {
    throw InvalidArgument("l_mot: at most " + std::to_string(kMaxVars - 2) + " variables are supported");
  }
  return l_mot_cache().get({c.genus(), n}, [&] { return compute_l_mot(c, n); });
}

RationalFunction res_lambda(const CurveModel& c, const Partition& lambda) {
  return res_cache().get({c.genus(), lambda.parts()}, [&] { return compute_res_lambda(c, lambda); });
}

SeriesZ h_mot(const CurveModel& c, const Partition& lambda, int truncation) {
  return expand_in_z(res_lambda(c, lambda), truncation);
}

RationalFunction sequential_res_lambda(const CurveModel& c, const Partition& lambda) {
  if (lambda.empty()) return RationalFunction::constant(kSeriesVars, 1);
  const BlockData bd = block_data(lambda);
  const auto nv = static_cast<std::size_t>(2 + bd.n);
  RationalFunction f = l_mot(c, bd.n);
  // image[i] is the current value of z_i as a monomial in the surviving
  // variables.
  std::vector<Exponent> image(static_cast<std::size_t>(bd.n + 1));
  for (int i = 1; i <= bd.n; ++i) image[static_cast<std::size_t>(i)] = z_exponent(i);
  for (int j = 1; j < bd.n; ++j) {
    if (is_block_start(bd, j)) continue;
    // res at z_{j+1} / z_j = L^{-1}: multiply by 1 - L z_{j+1} / z_j and set
    // z_{j+1} = L^{-1} z_j.
    const Exponent zj = image[static_cast<std::size_t>(j)];
    const Exponent target = l_exponent(-1) + zj;
    f *= RationalFunction(one_minus(nv, l_exponent(1) + z_exponent(j + 1) - zj));
    MonomialMap map = MonomialMap::identity(nv);
    map.images[z_index(static_cast<std::size_t>(j + 1))] = target;
    try {
      f = f.substitute(map);
    } catch (const PoleAtSubstitution&) {
      throw HigherOrderPole("sequential residue meets a pole of order >= 2 for " + lambda.to_string());
    }
    image[static_cast<std::size_t>(j + 1)] = target;
  }
  try {
    return f.substitute(lambda_substitution(bd));
  } catch (const PoleAtSubstitution&) {
    throw NonInvertibleQAtZero("Q_lambda vanishes identically for " + lambda.to_string());
  }
}

MotClass simple_pole_residue(const RationalFunction& f, const MotClass& x) {
  const ZFraction zf = z_fraction(f);
  if (zf.num.empty()) return MotClass();
  if (x.is_zero()) {
    if (zf.shift < -1) throw HigherOrderPole("simple_pole_residue: pole of order >= 2 at z = 0");
    if (zf.shift == -1) return -(zf.num.front() / zf.den.front());
    return MotClass();
  }
  MotClass den_at_x;
  for (auto it = zf.den.rbegin(); it != zf.den.rend(); ++it) den_at_x = den_at_x * x + *it;
  if (!den_at_x.is_zero()) return MotClass();
  // den = (z - x) q; synthetic division from the top coefficient.
  const std::size_t deg = zf.den.size() - 1;
  std::vector<MotClass> q(deg);
  for (std::size_t k = deg; k-- > 0;) q[k] = zf.den[k + 1] + (k + 1 < deg ? q[k + 1] * x : MotClass());
  MotClass q_at_x;
  for (auto it = q.rbegin(); it != q.rend(); ++it) q_at_x = q_at_x * x + *it;
  if (q_at_x.is_zero()) throw HigherOrderPole("simple_pole_residue: pole of order >= 2");
  MotClass num_at_x;
  for (auto it = zf.num.rbegin(); it != zf.num.rend(); ++it) num_at_x = num_at_x * x + *it;
  // (x - z) f = -z^shift num / q.
  return -(x.pow(zf.shift) * num_at_x / q_at_x);
}

std::optional<MotClass> stabilized_limit(const RationalFunction& f, const MotClass& x, int truncation, int window) {
  if (window < 1 || window > truncation + 1) throw InvalidArgument("stabilized_limit: bad window");
  const SeriesZ s = expand_in_z(f, truncation);
  std::optional<MotClass> value;
  for (int d = truncation - window + 1; d <= truncation; ++d) {
    const MotClass v = s[d] * x.pow(d + 1);
    if (value && !(*value == v)) return std::nullopt;
    value = v;
  }
  return value;
}

}  // namespace higgsmot
