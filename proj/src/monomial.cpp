#include "resurgence/monomial.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace resurgence {

std::int64_t to_i64_checked(const Int& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw ResourceError(std::string(what) + ": value exceeds 64-bit working range");
  }
  return static_cast<std::int64_t>(v);
}

Monomial::Monomial(std::vector<Int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw DimensionError("monomial needs at least one variable");
  for (const Int& e : exps_) {
    if (e < 0) throw Error("negative exponent");
  }
}

Monomial Monomial::one(std::size_t nvars) {
  return Monomial(std::vector<Int>(nvars, Int(0)));
}

Int Monomial::degree() const {
  Int d = 0;
  for (const Int& e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const Int& e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DimensionError("monomial dimension mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DimensionError("monomial dimension mismatch");
  std::vector<Int> out(exps_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.exps_[i];
  return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DimensionError("monomial dimension mismatch");
  std::vector<Int> out(exps_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (other.exps_[i] > out[i]) out[i] = other.exps_[i];
  }
  return Monomial(std::move(out));
}

std::string Monomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i);
    if (exps_[i] != 1) {
      s += '^';
      s += exps_[i].str();
    }
  }
  return s.empty() ? "1" : s;
}

bool canonical_before(const Monomial& a, const Monomial& b) {
  const Int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // within a degree, x0-heavy monomials come first (x^2 before x*y before y^2)
  return a.exponents() > b.exponents();
}

MonomialIdeal MonomialIdeal::zero(std::size_t nvars) {
  if (nvars == 0) throw DimensionError("ambient variable count must be positive");
  return MonomialIdeal(nvars, {});
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  if (nvars == 0) throw DimensionError("ambient variable count must be positive");
  return MonomialIdeal(nvars, {Monomial::one(nvars)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t nvars,
                                             std::vector<Monomial> gens) {
  return minimalize(nvars, std::move(gens));
}

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens) {
  if (nvars == 0) throw DimensionError("ambient variable count must be positive");
  for (const Monomial& g : gens) {
    if (g.nvars() != nvars) throw DimensionError("generator dimension mismatch");
  }
  std::sort(gens.begin(), gens.end(), canonical_before);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return MonomialIdeal(nvars, std::move(kept));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J,
                       const ResourceLimits& limits) {
  if (I.nvars() != J.nvars()) throw DimensionError("ideal dimension mismatch");
  const auto& a = I.generators();
  const auto& b = J.generators();
  const std::int64_t count =
      static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size());
  if (count > limits.generator_cap) {
    throw ResourceError("multiply: candidate generator count exceeds cap");
  }
  std::vector<Monomial> products;
  products.reserve(static_cast<std::size_t>(count));
  for (const Monomial& g : a) {
    for (const Monomial& h : b) products.push_back(g.times(h));
  }
  return minimalize(I.nvars(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& I, long long r, const ResourceLimits& limits) {
  if (r < 0) throw Error("power: negative exponent");
  if (r == 0) return MonomialIdeal::unit(I.nvars());
  MonomialIdeal acc = MonomialIdeal::unit(I.nvars());
  MonomialIdeal base = I;
  long long e = r;
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base, limits);
    e >>= 1;
    if (e > 0) base = multiply(base, base, limits);
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J,
                        const ResourceLimits& limits) {
  if (I.nvars() != J.nvars()) throw DimensionError("ideal dimension mismatch");
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.nvars());
  const auto& a = I.generators();
  const auto& b = J.generators();
  const std::int64_t count =
      static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size());
  if (count > limits.generator_cap) {
    throw ResourceError("intersect: candidate generator count exceeds cap");
  }
  std::vector<Monomial> lcms;
  lcms.reserve(static_cast<std::size_t>(count));
  for (const Monomial& g : a) {
    for (const Monomial& h : b) lcms.push_back(g.lcm(h));
  }
  return minimalize(I.nvars(), std::move(lcms));
}

bool contains_monomial(const MonomialIdeal& I, const Monomial& m) {
  if (I.nvars() != m.nvars()) throw DimensionError("ideal/monomial dimension mismatch");
  for (const Monomial& g : I.generators()) {
    if (g.divides(m)) return true;
  }
  return false;
}

Int alpha(const MonomialIdeal& I) {
  if (I.is_zero()) throw UndefinedValueError("alpha of the zero ideal is undefined");
  return I.generators().front().degree();  // canonical order is degree-first
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

constexpr std::int64_t kInfeasible = -1;

// Exact minimum of sum(deg g_i) over depth-many generators with
// g_1+...+g_depth <= residual, or kInfeasible. Memoized per top-level call.
struct DecompositionSearch {
  const std::vector<std::vector<std::int64_t>>& gens;  // sorted by degree asc
  const std::vector<std::int64_t>& gen_degs;
  std::int64_t min_gen_deg;
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::int64_t>, VecHash> memo;

  std::int64_t best(std::vector<std::int64_t>& res, std::int64_t res_deg, int depth) {
    if (depth == 0) return 0;
    if (res_deg < min_gen_deg * depth) return kInfeasible;  // degree bound
    auto [it, fresh] = memo.try_emplace(res);
    auto& per_depth = it->second;
    if (fresh) per_depth.assign(16, -2);  // -2 = unknown
    if (depth >= static_cast<int>(per_depth.size())) per_depth.resize(depth + 1, -2);
    if (per_depth[depth] != -2) return per_depth[depth];

    std::int64_t best_total = kInfeasible;
    const std::int64_t target = min_gen_deg * depth;  // unbeatable lower bound
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const auto& g = gens[gi];
      bool fits = true;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] > res[k]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      if (best_total != kInfeasible && gen_degs[gi] + min_gen_deg * (depth - 1) >= best_total) {
        break;  // gens sorted by degree: no later choice can improve
      }
      for (std::size_t k = 0; k < g.size(); ++k) res[k] -= g[k];
      const std::int64_t sub = best(res, res_deg - gen_degs[gi], depth - 1);
      for (std::size_t k = 0; k < g.size(); ++k) res[k] += g[k];
      if (sub != kInfeasible) {
        const std::int64_t total = sub + gen_degs[gi];
        if (best_total == kInfeasible || total < best_total) best_total = total;
        if (best_total == target) break;
      }
    }
    per_depth[depth] = best_total;
    return best_total;
  }
};

}  // namespace

bool in_power(const Monomial& m, const MonomialIdeal& I, long long r,
              const Int& min_slack_degree) {
  if (I.nvars() != m.nvars()) throw DimensionError("ideal/monomial dimension mismatch");
  if (r < 1) throw Error("in_power: r must be positive");
  if (min_slack_degree < 0) throw Error("in_power: negative slack");
  if (I.is_zero()) return false;

  // only generators dividing m can appear in a decomposition
  std::vector<std::vector<std::int64_t>> gens;
  std::vector<std::int64_t> gen_degs;
  for (const Monomial& g : I.generators()) {
    if (!g.divides(m)) continue;
    std::vector<std::int64_t> e(g.nvars());
    std::int64_t d = 0;
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      e[i] = to_i64_checked(g[i], "in_power");
      d += e[i];
    }
    gens.push_back(std::move(e));
    gen_degs.push_back(d);
  }
  if (gens.empty()) return false;

  const Int budget_big = m.degree() - min_slack_degree;
  if (budget_big < 0) return false;

  std::vector<std::int64_t> res(m.nvars());
  std::int64_t res_deg = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    res[i] = to_i64_checked(m[i], "in_power");
    res_deg += res[i];
  }
  if (r > res_deg + 1) {
    // even the cheapest nontrivial decompositions are ruled out unless the
    // ideal is the unit ideal (degree-0 generator)
    if (gen_degs.front() > 0) return false;
  }

  DecompositionSearch search{gens, gen_degs,
                             *std::min_element(gen_degs.begin(), gen_degs.end()),
                             {}};
  const std::int64_t total = search.best(res, res_deg, static_cast<int>(r));
  if (total == kInfeasible) return false;
  return Int(res_deg) - Int(total) >= min_slack_degree;
}

ContainmentOutcome ideal_in_power(const MonomialIdeal& J, const MonomialIdeal& I,
                                  long long r, const Int& min_slack_degree) {
  if (I.nvars() != J.nvars()) throw DimensionError("ideal dimension mismatch");
  for (const Monomial& g : J.generators()) {
    if (!in_power(g, I, r, min_slack_degree)) return {false, g};
  }
  return {true, std::nullopt};
}

}  // namespace resurgence
