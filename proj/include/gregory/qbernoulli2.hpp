#pragma once

#include <vector>

#include "gregory/bernoulli2.hpp"
#include "gregory/rational_function.hpp"
#include "gregory/sequence_table.hpp"
#include "gregory/verification.hpp"

namespace gregory {

// [n]_q = (1 - q^n)/(1 - q) in canonical form, for any integer n.
RationalFunction q_integer(long n);

struct QB2Tag {};
// b_0(q)..b_M(q), the coefficients of t/log_q(1+t).
using QB2Table = SequenceTable<RationalFunction, QB2Tag>;

// b_n(q) = -sum_{j=1..n} (-1)^j b_{n-j}(q)/[j+1]_q.
QB2Table qb2_compute(long max_index);
// The same table by inverting log_q(1+t)/t.
QB2Table qb2_by_series(long max_index);

// sum_{k=0..n} (-1)^k b_{n-k}(q)/[k+1]_q; equals [n == 0] on a correct table.
RationalFunction b2r_residual(const QB2Table& table, long n);

// sum_{k=0..n} q^(k-1) b_k(q) b_{n-k}(q)
RationalFunction qtheorem2_lhs(const QB2Table& table, long n);
// -[n-1]_q b_n(q) - [n-2]_q b_{n-1}(q)
RationalFunction qtheorem2_rhs(const QB2Table& table, long n);

// Degree of L_n = prod_{d=2..n+1} Phi_d(q)^floor(n/(d-1)), a common multiple
// of every denominator arising in b_0(q)..b_n(q). Since deg b_k(q) <= -k,
// q L_n (lhs - rhs) is a polynomial of degree at most deg L_n, so agreement
// at deg L_n + 1 admissible points (q not in {0, -1}) proves the identity at
// that n.
long denominator_degree_bound(long n);

enum class SampleMode { symbolic, sampled };

std::vector<Rational> default_sample_points();

VerificationReport verify_theorem2_symbolic(long n_max, unsigned jobs = 1);
// Evaluates both sides at each point through the recurrence specialised to
// q = v. A point that hits a pole is moved to (p+1)/r until it does not.
VerificationReport verify_theorem2_sampled(long n_max, const std::vector<Rational>& points, unsigned jobs = 1);
VerificationReport verify_theorem2(long n_max, SampleMode mode, const std::vector<Rational>& points,
                                   unsigned jobs = 1);

// b_n(q) at q = 1 equals b_n, with the denominator nonzero at 1.
VerificationReport q_degeneration_check(const QB2Table& qtable, const B2Table& btable, long n_max,
                                        unsigned jobs = 1);
VerificationReport verify_qdegen(long n_max, unsigned jobs = 1);

VerificationReport verify_b2r(long n_max, unsigned jobs = 1);

// [n-a]_q = [n]_q - q^(n-a) [a]_q for |n|, |a| <= bound.
VerificationReport verify_qint_split(long bound, unsigned jobs = 1);

}  // namespace gregory
