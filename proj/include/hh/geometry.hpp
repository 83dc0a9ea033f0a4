#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hh/error.hpp"
#include "hh/linalg.hpp"

namespace hh {

/// A smooth projective curve of genus g with m stacky points of weights e_i.
struct WeightedCurveSpec {
  std::int64_t genus = 0;
  std::vector<std::int64_t> weights;
  std::vector<Rational> points;  // only used for g = 0, to build a canonical algebra
};

inline void validate(const WeightedCurveSpec& spec) {
  if (spec.genus < 0) throw Error(ErrorKind::InvalidWeights, "genus must be nonnegative");
  for (auto e : spec.weights)
    if (e < 2) throw Error(ErrorKind::InvalidWeights, "curve weights must be at least 2");
}

struct CurveHHDims {
  std::map<int, std::int64_t> homology;  // degrees -1, 0, 1
  std::int64_t hh0 = 0;
  std::int64_t hh1 = 0;
  std::int64_t hh2 = 0;
  std::int64_t e = 0;
  std::int64_t a = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
};

/// HH_0 = 2 + e − m, HH_{±1} = g, HH^0 = 1, HH^1 = g + a − r, HH^2 = d + m − r
/// with e = Σ e_i, r = min(a, m) and (a, d) = (3, 0), (1, 1), (0, 3g − 3) for
/// g = 0, 1, ≥ 2.
inline CurveHHDims curve_hh_dims(const WeightedCurveSpec& spec) {
  validate(spec);
  const std::int64_t g = spec.genus;
  const auto m = static_cast<std::int64_t>(spec.weights.size());
  CurveHHDims out;
  for (auto w : spec.weights) out.e += w;
  out.a = g == 0 ? 3 : g == 1 ? 1 : 0;
  out.d = g == 0 ? 0 : g == 1 ? 1 : 3 * g - 3;
  out.r = std::min(out.a, m);
  out.hh0 = 1;
  out.hh1 = g + out.a - out.r;
  out.hh2 = out.d + m - out.r;
  out.homology = {{-1, g}, {0, 2 + out.e - m}, {1, g}};
  return out;
}

namespace detail {

inline Integer lcm_of(const std::vector<std::int64_t>& ws, std::optional<std::size_t> skip = std::nullopt) {
  Integer l = 1;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (skip && *skip == i) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), Integer(static_cast<long>(ws[i])).get_mpz_t());
  }
  return l;
}

inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline void require_positive(const std::vector<std::int64_t>& ws) {
  for (auto w : ws)
    if (w < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
}

}  // namespace detail

/// Each a_i divides the lcm of the others. The empty list satisfies it; a
/// single weight a does only when a = 1.
inline bool weight_condition(const std::vector<std::int64_t>& weights) {
  detail::require_positive(weights);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (detail::lcm_of(weights, i) % static_cast<long>(weights[i]) != 0) return false;
  }
  return true;
}

enum class EulerClass { Spherical, Parabolic, Hyperbolic };

inline std::string_view to_string(EulerClass c) {
  switch (c) {
    case EulerClass::Spherical: return "spherical";
    case EulerClass::Parabolic: return "parabolic";
    case EulerClass::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

inline EulerClass classify_sign(const Rational& chi) {
  if (chi > 0) return EulerClass::Spherical;
  if (chi == 0) return EulerClass::Parabolic;
  return EulerClass::Hyperbolic;
}

/// χ = 2 − n + Σ 1/a_i.
inline Rational euler_characteristic(const std::vector<std::int64_t>& weights) {
  detail::require_positive(weights);
  Rational chi = 2 - static_cast<long>(weights.size());
  for (auto w : weights) chi += Rational(1, static_cast<unsigned long>(w));
  return chi;
}

struct CompanionInvariants {
  Integer lcm;                    // ā
  std::vector<Integer> degrees;   // δ_i = ā / a_i
  Integer omega;                  // (n − 2)ā − Σ δ_i
  Integer group_order;            // ∏ a_i / ā
  Integer genus;                  // 1 + ∏ a_i · ω / (2ā²)
  Rational euler;                 // −ω / ā
  std::vector<Rational> fiber_sizes;  // |G| / a_i
  bool weight_condition = false;
  EulerClass euler_class = EulerClass::Spherical;
};

/// Throws NonIntegerGenus when the genus formula does not produce an integer,
/// which happens only for weights failing the weight condition.
inline CompanionInvariants companion_invariants(const std::vector<std::int64_t>& weights) {
  if (weights.size() < 2) throw Error(ErrorKind::InvalidWeights, "the companion needs at least two weights");
  detail::require_positive(weights);
  CompanionInvariants c;
  c.lcm = detail::lcm_of(weights);
  Integer product = 1;
  Integer sum_delta = 0;
  for (auto w : weights) {
    c.degrees.push_back(c.lcm / static_cast<long>(w));
    sum_delta += c.degrees.back();
    product *= static_cast<long>(w);
  }
  c.omega = Integer(static_cast<long>(weights.size()) - 2) * c.lcm - sum_delta;
  c.group_order = product / c.lcm;
  const Rational genus = 1 + detail::ratio(product * c.omega, 2 * c.lcm * c.lcm);
  if (genus.get_den() != 1)
    throw Error(ErrorKind::NonIntegerGenus, "companion genus " + to_string(genus) + " is not an integer");
  c.genus = genus.get_num();
  c.euler = detail::ratio(-c.omega, c.lcm);
  for (auto w : weights) c.fiber_sizes.push_back(detail::ratio(c.group_order, static_cast<long>(w)));
  c.weight_condition = weight_condition(weights);
  c.euler_class = classify_sign(c.euler);
  return c;
}

/// How a spherical or parabolic weighted line arises as a quotient stack:
/// [ℙ¹/G] or [E/G] for an elliptic curve E with the given j-invariant.
struct Realization {
  std::string curve;  // "P1" or "elliptic"
  std::string group;
  std::optional<std::string> j_invariant;
};

struct EulerClassification {
  std::vector<std::int64_t> normalized;  // weights ≥ 2 sorted, padded with 1s to length 2
  Rational chi;
  EulerClass euler_class = EulerClass::Spherical;
  std::optional<Realization> realization;
};

inline EulerClassification euler_classify(const std::vector<std::int64_t>& weights) {
  detail::require_positive(weights);
  EulerClassification out;
  for (auto w : weights)
    if (w > 1) out.normalized.push_back(w);
  std::sort(out.normalized.begin(), out.normalized.end());
  while (out.normalized.size() < 2) out.normalized.insert(out.normalized.begin(), 1);
  out.chi = euler_characteristic(weights);
  out.euler_class = classify_sign(out.chi);
  const auto& w = out.normalized;
  auto P1 = [](std::string g) { return Realization{"P1", std::move(g), std::nullopt}; };
  auto E = [](std::string g, std::string j) { return Realization{"elliptic", std::move(g), std::move(j)}; };
  if (w.size() == 2) {
    if (w[0] == w[1]) out.realization = P1("C_" + std::to_string(w[0]));
  } else if (w.size() == 3) {
    if (w[0] == 2 && w[1] == 2) out.realization = P1("D_" + std::to_string(2 * w[2]));
    else if (w == std::vector<std::int64_t>{2, 3, 3}) out.realization = P1("A_4");
    else if (w == std::vector<std::int64_t>{2, 3, 4}) out.realization = P1("S_4");
    else if (w == std::vector<std::int64_t>{2, 3, 5}) out.realization = P1("A_5");
    else if (w == std::vector<std::int64_t>{3, 3, 3}) out.realization = E("C_3", "0");
    else if (w == std::vector<std::int64_t>{2, 3, 6}) out.realization = E("C_6", "0");
    else if (w == std::vector<std::int64_t>{2, 4, 4}) out.realization = E("C_4", "1728");
  } else if (w == std::vector<std::int64_t>{2, 2, 2, 2}) {
    out.realization = E("C_2", "any");
  }
  return out;
}

/// False exactly for genus 0 with two points of unequal weight.
inline bool realizable_as_quotient(const WeightedCurveSpec& spec) {
  validate(spec);
  return !(spec.genus == 0 && spec.weights.size() == 2 && spec.weights[0] != spec.weights[1]);
}

/// 2g_C − 2 = −2|G| + Σ (|G|/a_i)(a_i − 1) = |G|·ω/ā. False when the weight
/// condition fails, since the companion does not exist then.
inline bool hurwitz_check(const std::vector<std::int64_t>& weights) {
  if (weights.size() < 2 || !weight_condition(weights)) return false;
  const CompanionInvariants c = companion_invariants(weights);
  const Integer lhs = 2 * c.genus - 2;
  Rational ramification = Rational(-2 * c.group_order);
  for (std::size_t i = 0; i < weights.size(); ++i) ramification += c.fiber_sizes[i] * (static_cast<long>(weights[i]) - 1);
  const Rational via_omega = detail::ratio(c.group_order * c.omega, c.lcm);
  return Rational(lhs) == ramification && Rational(lhs) == via_omega;
}

}  // namespace hh
