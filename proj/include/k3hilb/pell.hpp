#pragma once

#include "error.hpp"
#include "integer.hpp"

#include <vector>

namespace k3hilb {

struct SqrtContinuedFraction {
  Integer a0;
  std::vector<Integer> period;
};

/// Fundamental solution of X² − N·Y² = 1.
struct PellSolution {
  Integer X;
  Integer Y;
  Integer N;
};

namespace detail {
inline void require_non_square(const Integer& N) {
  if (N < 2 || is_square(N))
    throw Error(ErrorCode::PerfectSquare,
                "perfect square: " + N.str() + " has no Pell solution");
}
}  // namespace detail

/// Expansion √N = [a0; period, period, ...] via the (m, d, a) recurrence.
/// The period ends at the first partial quotient equal to 2·a0.
inline SqrtContinuedFraction sqrt_continued_fraction(const Integer& N) {
  detail::require_non_square(N);
  SqrtContinuedFraction cf{isqrt(N), {}};
  Integer m = 0, d = 1, a = cf.a0;
  do {
    m = d * a - m;
    d = (N - m * m) / d;
    a = (cf.a0 + m) / d;
    cf.period.push_back(a);
  } while (a != 2 * cf.a0);
  return cf;
}

/// Minimal positive solution from the convergents of √N. For an even period
/// length L the convergent p_{L-1}/q_{L-1} solves the equation; for odd L it
/// solves X² − N·Y² = −1, so the walk continues through a second period and
/// stops at p_{2L-1}/q_{2L-1}.
inline PellSolution fundamental_solution(const Integer& N) {
  const SqrtContinuedFraction cf = sqrt_continued_fraction(N);
  const std::size_t L = cf.period.size();
  const std::size_t steps = (L % 2 == 0) ? L : 2 * L;

  // p_{-1} = 1, q_{-1} = 0; p_0 = a0, q_0 = 1.
  Integer p_prev = 1, q_prev = 0;
  Integer p = cf.a0, q = 1;
  for (std::size_t i = 1; i < steps; ++i) {
    const Integer& a = cf.period[(i - 1) % L];
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q, N};
}

}  // namespace k3hilb
