#pragma once

#include <vector>

#include "gregory/rational.hpp"
#include "gregory/sequence_table.hpp"
#include "gregory/verification.hpp"

namespace gregory {

struct BTag {};
// B_0..B_M with t/(e^t - 1) = sum B_n t^n/n!, so B_1 = -1/2.
using BTable = SequenceTable<Rational, BTag>;

// sum_{k=0..n} C(n+1, k) B_k = 0 for n >= 1.
BTable bernoulli_compute(long max_index);
// Inverse of (e^t - 1)/t, rescaled by n!.
BTable bernoulli_by_series(long max_index);

// Dilcher's array c_k^(N), 1 <= N <= N_max, 0 <= k <= floor((N-1)/2):
//   c_0^(1) = 1,  c_k^(N+1) = -c_k^(N)/N + c_{k-1}^(N-1)/4,
// with the row c^(0) taken to be identically zero.
class CTable {
public:
    explicit CTable(std::vector<std::vector<Rational>> rows);

    int max_order() const { return static_cast<int>(rows_.size()); }
    // Zero outside the stored triangle, and for N = 0.
    const Rational& at(int N, int k) const;
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    friend bool operator==(const CTable&, const CTable&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

CTable c_table_build(int max_order);

// Both sides of sum_{j=1..n-1} C(2n, 2j) B_{2j} B_{2n-2j} = -(2n+1) B_{2n}.
Rational euler_lhs(const BTable& table, long n);
Rational euler_rhs(const BTable& table, long n);
// Throws std::invalid_argument for n_max < 2.
VerificationReport verify_euler(long n_max, unsigned jobs = 1);

// Multinomial-weighted sum over j_1 + ... + j_N = n of B_{2j_1}...B_{2j_N},
// computed as (2n)! times the t^n coefficient of (sum_j B_{2j} t^j/(2j)!)^N.
Rational dilcher_lhs(const BTable& table, int N, long n);
// (2n)!/(2n-N)! sum_{k=0..floor((N-1)/2)} c_k^(N) B_{2n-2k}/(2n-2k)
Rational dilcher_rhs(const BTable& btable, const CTable& ctable, int N, long n);
// Checks every (N, n) with 1 <= N <= N_max, N/2 < n <= n_max.
VerificationReport verify_dilcher(int max_order, long n_max, unsigned jobs = 1);

}  // namespace gregory
