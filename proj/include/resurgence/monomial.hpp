#pragma once

#include "resurgence/errors.hpp"
#include "resurgence/limits.hpp"
#include "resurgence/numbers.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace resurgence {

// A monomial in K[x_0..x_{n-1}], stored as its exponent vector.
class Monomial {
 public:
  explicit Monomial(std::vector<Int> exponents);
  static Monomial one(std::size_t nvars);

  std::size_t nvars() const { return exps_.size(); }
  const Int& operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Int>& exponents() const { return exps_; }
  Int degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;  // componentwise <=
  Monomial times(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

  std::string str() const;  // x0^2*x1 syntax; "1" for the unit monomial

 private:
  std::vector<Int> exps_;
};

// Canonical generator order: degree first, then lexicographic with x0
// heaviest. Every generator list in the library is sorted with this.
bool canonical_before(const Monomial& a, const Monomial& b);

// An ideal generated by monomials, kept as the divisibility antichain of its
// minimal generators in canonical order. The zero ideal has no generators;
// the unit ideal is generated by the monomial 1.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t nvars);
  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal from_generators(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool operator==(const MonomialIdeal& other) const = default;

 private:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> antichain)
      : nvars_(nvars), gens_(std::move(antichain)) {}
  friend MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J,
                       const ResourceLimits& limits = {});

// I^r by repeated squaring; materialization is capped (generator sets grow
// exponentially in r), callers needing large r use in_power instead.
MonomialIdeal power(const MonomialIdeal& I, long long r,
                    const ResourceLimits& limits = {});

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J,
                        const ResourceLimits& limits = {});

bool contains_monomial(const MonomialIdeal& I, const Monomial& m);

// least generator degree; undefined for the zero ideal
Int alpha(const MonomialIdeal& I);

// Decides m in M^k * I^r (M the irrelevant ideal, k = min_slack_degree)
// without materializing I^r: a memoized branch-and-bound search for r
// generators g_1..g_r with g_1+...+g_r <= m and deg(m) - sum deg(g_i) >= k.
bool in_power(const Monomial& m, const MonomialIdeal& I, long long r,
              const Int& min_slack_degree);

struct ContainmentOutcome {
  bool contained = false;
  std::optional<Monomial> witness;  // first failing generator, canonical order
};

ContainmentOutcome ideal_in_power(const MonomialIdeal& J, const MonomialIdeal& I,
                                  long long r, const Int& min_slack_degree);

}  // namespace resurgence
