#pragma once

#include <vector>

#include "gregory/polynomial.hpp"
#include "gregory/rational.hpp"
#include "gregory/sequence_table.hpp"
#include "gregory/verification.hpp"

namespace gregory {

struct B2Tag {};
// b_0..b_M, the coefficients of t/log(1+t).
using B2Table = SequenceTable<Rational, B2Tag>;

// b_n from sum_{k=0..n} (-1)^k b_{n-k}/(k+1) = [n == 0].
B2Table b2_compute(long max_index);
// The same table by inverting the series log(1+t)/t.
B2Table b2_by_series(long max_index);

// sum_{k=0..n} (-1)^k b_{n-k}/(k+1); zero for n > 0 on a correct table.
Rational b2e_residual(const B2Table& table, long n);

// Triangular array of polynomials a_k^(N)(x), 1 <= N <= N_max, 0 <= k < N,
// built from
//   a_k^(N)(x) = -((x-N+1) a_k^(N-1)(x) + (x-N) a_{k-1}^(N-1)(x-1)) / (N-1).
class ATable {
public:
    explicit ATable(std::vector<std::vector<Polynomial>> rows);

    int max_order() const { return static_cast<int>(rows_.size()); }
    // Zero polynomial for k outside [0, N).
    const Polynomial& at(int N, int k) const;
    const std::vector<std::vector<Polynomial>>& rows() const { return rows_; }

    friend bool operator==(const ATable&, const ATable&) = default;

private:
    std::vector<std::vector<Polynomial>> rows_;
};

ATable a_table_build(int max_order);

// s_N(n) = sum over j_1+...+j_N = n of b_{j_1}...b_{j_N}, by iterated
// convolution of the b-table with itself. Zero for n < 0.
Rational s_convolve(const B2Table& table, int N, long n);

// sum_{k=0..N-1} a_k^(N)(n) b_{n-k}, with b at negative index read as 0.
Rational s_closed_form(const ATable& atable, const B2Table& btable, int N, long n);

// All rows s_1..s_{N_max} over 0..n_max, each row the convolution of the
// previous one with b. Immutable once built.
class ConvolutionPowers {
public:
    ConvolutionPowers(const B2Table& table, int max_order, long max_index);

    const Rational& at(int N, long n) const;
    int max_order() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::vector<Rational>> rows_;
};

// Checks s_convolve == s_closed_form over the grid. The b-table must cover
// n_range.last; it is taken as given so a deliberately perturbed table can
// be fed in.
VerificationReport verify_theorem1(const B2Table& table, IndexRange N_range, IndexRange n_range, unsigned jobs = 1);
VerificationReport verify_theorem1(IndexRange N_range, IndexRange n_range, unsigned jobs = 1);

// Residual of the defining recurrence is [n == 0] for 0 <= n <= n_max.
VerificationReport verify_b2e(long n_max, unsigned jobs = 1);

// The N = 2 and N = 3 rows equal their factored closed forms as polynomials.
VerificationReport verify_s2s3();

// a_0^(N) = (-1)^(N-1)(x-1)...(x-N+1)/(N-1)! and
// a_{N-1}^(N) = (-1)^(N-1)(x-N)^(N-1)/(N-1)! for N <= N_max.
VerificationReport verify_boundary_lines(int max_order);

}  // namespace gregory
