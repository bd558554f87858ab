// oracle.hpp - closed-form counts, bounds and thresholds for GP(n, k), and
// their comparison against BFS-observed partitions.
//
// Every threshold is evaluated over integers by cross-multiplication; bound
// values are exact rationals.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "dbal/balance.hpp"
#include "dbal/errors.hpp"
#include "dbal/gp.hpp"

namespace dbal {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------
// Domains

// Exact delta for the pair (v_0, u_0): k >= 3, n >= k(k+2), k | n.
inline bool in_delta_domain(std::int64_t n, std::int64_t k) {
  return k >= 3 && n >= k * (k + 2) && n % k == 0;
}

// Lower bound on 2|W_{v0u0}| + |tie|: k >= 3, n > k(k+2), k does not divide n.
inline bool in_onedb_sum_domain(std::int64_t n, std::int64_t k) {
  return k >= 3 && n > k * (k + 2) && n % k != 0;
}

// Bounds for the pair (v_{-k}, u_0): k even >= 6 with n > 5k^2/4 + 2k, or
// k odd >= 5 with n > 7k^2/4 + 3k/4.
inline bool in_twodb_domain(std::int64_t n, std::int64_t k) {
  if (k % 2 == 0) return k >= 6 && 4 * n > 5 * k * k + 8 * k;
  return k >= 5 && 4 * n > 7 * k * k + 3 * k;
}

namespace detail {
inline std::string params(std::int64_t n, std::int64_t k) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Closed forms

// |W_{v0u0}| - |W_{u0v0}| = 2n/k - 2k - 4.
inline std::int64_t delta_u0v0(std::int64_t n, std::int64_t k) {
  if (!in_delta_domain(n, k)) throw DomainError("delta formula undefined at " + detail::params(n, k));
  return 2 * n / k - 2 * k - 4;
}

// 2n + 2 for even k, 2n + 4 for odd k.
inline Rational onedb_sum_bound(std::int64_t n, std::int64_t k) {
  if (!in_onedb_sum_domain(n, k)) throw DomainError("sum bound undefined at " + detail::params(n, k));
  return Rational(2 * n + (k % 2 == 0 ? 2 : 4));
}

// Lower bound on |W_{v_{-k}u_0}|.
inline Rational twodb_w_lower(std::int64_t n, std::int64_t k) {
  if (!in_twodb_domain(n, k)) throw DomainError("bound undefined at " + detail::params(n, k));
  const Rational base = Rational(n, 2) + Rational(n, 2 * k);
  if (k % 2 == 0) return base + Rational(k, 2) - Rational(1, 2);
  return base + Rational(k, 4) - Rational(3, 4);
}

// Lower bound on the tie-or-closer-to-v_{-k} vertices left out of twodb_w_lower.
inline Rational twodb_rest_lower(std::int64_t n, std::int64_t k) {
  if (!in_twodb_domain(n, k)) throw DomainError("bound undefined at " + detail::params(n, k));
  const Rational base = Rational(n) - Rational(9 * k, 4);
  return k % 2 == 0 ? base - 1 : base + Rational(3, 4);
}

// Lower bound on 2|W_{v_{-k}u_0}| + |tie|; always exceeds 2n on its domain.
inline Rational twodb_sum_lower(std::int64_t n, std::int64_t k) {
  if (!in_twodb_domain(n, k)) throw DomainError("bound undefined at " + detail::params(n, k));
  const Rational base = Rational(2 * n) + Rational(n, k);
  const Rational sum = k % 2 == 0 ? base - Rational(5 * k, 4) - 2
                                  : base - Rational(7 * k, 4) - Rational(3, 4);
  if (sum <= Rational(2 * n)) throw std::logic_error("sum bound does not exceed 2n at " + detail::params(n, k));
  return sum;
}

// ---------------------------------------------------------------------------
// Near-ring membership claims

enum class NearRingPair { OneDB, TwoDB };  // (u_0, v_0) and (u_0, v_{-k})
enum class Membership { CloserFirst, CloserSecond, Tie, Unclassified };

inline std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::CloserFirst: return "CloserFirst";
    case Membership::CloserSecond: return "CloserSecond";
    case Membership::Tie: return "Tie";
    case Membership::Unclassified: return "Unclassified";
  }
  return "?";
}

namespace detail {

inline Membership classify_onedb(std::int64_t n, std::int64_t k, VertexId v) {
  const std::int64_t i = v.index;
  if (v.kind == VertexKind::Outer) {
    const std::int64_t a = i <= n / 2 ? i : n - i;
    if (k % 2 == 0) {
      if (a <= k / 2) return Membership::CloserFirst;
      if (a == (k + 2) / 2) return Membership::Tie;
      return Membership::CloserSecond;
    }
    return a <= (k + 1) / 2 ? Membership::CloserFirst : Membership::CloserSecond;
  }
  // Inner rim: only the k | n split is classified. v_{jk} are closer to v0,
  // every other inner vertex to u0.
  if (n % k == 0) return i % k == 0 ? Membership::CloserSecond : Membership::CloserFirst;
  return Membership::Unclassified;
}

inline Membership classify_twodb(std::int64_t n, std::int64_t k, VertexId v) {
  const std::int64_t i = v.index;
  const std::int64_t back = (n - i) % n;  // v is u_{-back} or v_{-back}
  const bool even = k % 2 == 0;
  // Last "back" offset that is closer to u_0, and the offset tied for both kinds.
  const std::int64_t near_last = even ? k / 2 : (k - 1) / 2;
  const std::int64_t tie_both = even ? -1 : (k + 1) / 2;

  if (v.kind == VertexKind::Outer) {
    const std::int64_t forward_last = even ? k / 2 + 1 : (k + 1) / 2;
    if (i <= forward_last) return Membership::CloserFirst;
    if (i <= k) return Membership::Tie;
    if (back >= 1 && back <= near_last) return Membership::CloserFirst;
    if (back == tie_both) return Membership::Tie;
    if (back > near_last && back < 2 * k) return Membership::CloserSecond;
    return Membership::Unclassified;
  }
  if (i == 0) return Membership::Tie;
  if (back >= 1 && back <= near_last) return Membership::CloserFirst;
  if (back == k) return Membership::CloserSecond;
  if (back > near_last && back < 2 * k) return Membership::Tie;
  return Membership::Unclassified;
}

}  // namespace detail

// Membership of v relative to the canonical pair: CloserFirst means closer to
// u_0, CloserSecond closer to v_0 (OneDB) or v_{-k} (TwoDB). Vertices outside
// the explicitly classified index ranges are Unclassified.
inline Membership classify_near_ring(std::int64_t n, std::int64_t k, NearRingPair pair, VertexId v) {
  if (pair == NearRingPair::OneDB) {
    if (k < 3 || n < k * (k + 2)) throw DomainError("no (u0,v0) classification at " + detail::params(n, k));
  } else if (!in_twodb_domain(n, k)) {
    throw DomainError("no (u0,v_-k) classification at " + detail::params(n, k));
  }
  if (v.index >= n) throw InvalidVertex("vertex index out of range");
  return pair == NearRingPair::OneDB ? detail::classify_onedb(n, k, v) : detail::classify_twodb(n, k, v);
}

// ---------------------------------------------------------------------------
// Predictions

enum class Status { Balanced, Unbalanced, Unknown };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Balanced: return "Balanced";
    case Status::Unbalanced: return "Unbalanced";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

struct Prediction {
  std::int64_t n = 0;
  std::int64_t k = 0;
  int ell = 1;
  Status status = Status::Unknown;
  std::string source = "none";  // tag of the clause that decided the status
};

inline Prediction predict(std::int64_t n, std::int64_t k, int ell) {
  require_gp_params(n, k);
  if (ell != 1 && ell != 2) throw EllUnsupported("no prediction exists for ell=" + std::to_string(ell));
  Prediction p{n, k, ell};
  auto set = [&](Status s, std::string tag) {
    p.status = s;
    p.source = std::move(tag);
    return p;
  };
  if (ell == 1) {
    if (k >= 3 && n > k * (k + 2)) return set(Status::Unbalanced, "l1:k>=3:n>k(k+2)");
    if (k >= 3 && n == k * (k + 2)) return set(Status::Balanced, "l1:k>=3:n=k(k+2)");
    if (k == 2 && n > 10) return set(Status::Unbalanced, "l1:k=2:n>10");
    if (k == 2 && n == 10) return set(Status::Balanced, "l1:k=2:n=10");
    return p;
  }
  if (k >= 6 && k % 2 == 0 && 4 * n > 5 * k * k + 8 * k) return set(Status::Unbalanced, "l2:k>=6-even:4n>5k^2+8k");
  if (k >= 5 && k % 2 == 1 && 4 * n > 7 * k * k + 3 * k) return set(Status::Unbalanced, "l2:k>=5-odd:4n>7k^2+3k");
  if (k == 2 && n > 10) return set(Status::Unbalanced, "l2:k=2:n>10");
  if (k == 3 && n > 10) return set(Status::Unbalanced, "l2:k=3:n>10");
  if (k == 4 && n > 21) return set(Status::Unbalanced, "l2:k=4:n>21");
  if ((n == 10 && (k == 2 || k == 3)) || (n == 21 && k == 4)) return set(Status::Balanced, "l2:small-balanced");
  return p;
}

// Conjectured smallest n_k beyond which GP(n, k) is not l-distance-balanced
// for any l below the diameter.
inline std::int64_t conjectured_nk(std::int64_t k) {
  if (k < 2) throw DomainError("n_k is defined for k >= 2");
  if (k == 2) return 11;
  if (k % 2 == 1) return (k + 1) * (k + 1);
  return k * (k + 2);
}

// ---------------------------------------------------------------------------
// Bound checks against BFS

enum class BoundName {
  DeltaU0V0,   // |W_{v0u0}| - |W_{u0v0}|, equality
  OneDbSum,    // 2|W_{v0u0}| + |tie|
  TwoDbW,      // |W_{v_{-k}u0}|
  TwoDbRest,   // |W_{v_{-k}u0}| + |tie| against twodb_w_lower + twodb_rest_lower
  TwoDbSum,    // 2|W_{v_{-k}u0}| + |tie|
};

inline std::string_view to_string(BoundName b) {
  switch (b) {
    case BoundName::DeltaU0V0: return "delta_u0v0";
    case BoundName::OneDbSum: return "onedb_sum";
    case BoundName::TwoDbW: return "twodb_w";
    case BoundName::TwoDbRest: return "twodb_rest";
    case BoundName::TwoDbSum: return "twodb_sum";
  }
  return "?";
}

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  BoundName bound = BoundName::DeltaU0V0;
  Rational predicted;
  std::int64_t observed = 0;
  bool equality = false;  // otherwise observed >= predicted
  bool holds = false;
};

namespace detail {
inline BoundReport make_report(std::int64_t n, std::int64_t k, BoundName name, Rational predicted,
                               std::int64_t observed, bool equality) {
  const Rational obs(observed);
  return {n, k, name, predicted, observed, equality, equality ? obs == predicted : obs >= predicted};
}
}  // namespace detail

// Every bound whose domain contains (n, k, ell), evaluated on BFS partitions
// of the canonical pairs (v_0, u_0) for ell = 1 and (v_{-k}, u_0) for ell = 2.
inline std::vector<BoundReport> check_bounds(const RotationalDistances& rd, int ell) {
  const auto& label = *rd.graph().label();
  const std::int64_t n = label.n, k = label.k;
  std::vector<BoundReport> out;
  if (ell == 1 && (in_delta_domain(n, k) || in_onedb_sum_domain(n, k))) {
    auto p = partition(rd, VertexId::inner(0, label.n).flat(label.n), 0);
    const auto closer_v0 = static_cast<std::int64_t>(p.closer_x);
    const auto closer_u0 = static_cast<std::int64_t>(p.closer_y);
    const auto tie = static_cast<std::int64_t>(p.tie);
    if (in_delta_domain(n, k)) {
      out.push_back(detail::make_report(n, k, BoundName::DeltaU0V0, Rational(delta_u0v0(n, k)),
                                        closer_v0 - closer_u0, true));
    } else {
      out.push_back(detail::make_report(n, k, BoundName::OneDbSum, onedb_sum_bound(n, k),
                                        2 * closer_v0 + tie, false));
    }
  }
  if (ell == 2 && in_twodb_domain(n, k)) {
    auto p = partition(rd, VertexId::inner(-k, label.n).flat(label.n), 0);
    const auto w = static_cast<std::int64_t>(p.closer_x);
    const auto tie = static_cast<std::int64_t>(p.tie);
    const Rational w_lower = twodb_w_lower(n, k);
    out.push_back(detail::make_report(n, k, BoundName::TwoDbW, w_lower, w, false));
    out.push_back(detail::make_report(n, k, BoundName::TwoDbRest, w_lower + twodb_rest_lower(n, k),
                                      w + tie, false));
    out.push_back(detail::make_report(n, k, BoundName::TwoDbSum, twodb_sum_lower(n, k), 2 * w + tie, false));
  }
  return out;
}

}  // namespace dbal
