#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "rydberg/core_model.hpp"

namespace rydberg {

/// Exact counts J_{N,L} of jammed configurations for one blockade range,
/// for all lengths up to l_max. rows[L] maps the excited-atom count N to the
/// count; keys outside the feasible window are simply absent (zero).
struct CoeffTable {
  int b = 0;
  int l_max = 0;
  std::vector<std::map<int, mpz_class>> rows;

  const mpz_class& at(int n, int l) const;
  mpz_class row_total(int l) const;

  bool operator==(const CoeffTable&) const = default;

  /// CSV with header b,N,L,count; counts as exact decimal strings.
  void write_csv(std::ostream& os) const;
};

struct SeriesTerm {
  int x_deg;
  int y_deg;
  long coeff;
};

/// The three building-block polynomials of the transfer construction:
/// start (neutral prefix of length 0..b), block (excited atom plus b..2b
/// trailing neutrals), end (excited atom plus 0..b trailing neutrals).
struct BlockEncoding {
  std::vector<SeriesTerm> start;
  std::vector<SeriesTerm> block;
  std::vector<SeriesTerm> end;
};

BlockEncoding block_encoding(const ModelParams& params);

/// Expands F_b(x,y) = 1 + start*end/(1 - block) as a truncated power series
/// over exact integers (geometric-series expansion of the quotient).
CoeffTable jammed_counts(const ModelParams& params, int l_max);

/// Independent second path: the linear recurrence read off the cleared
/// denominator 1 - y - x y^{b+1} + x y^{2b+2}. Must agree with
/// jammed_counts exactly; the test suites treat a mismatch as fatal.
CoeffTable jammed_counts_recurrence(const ModelParams& params, int l_max);

/// Single coefficient J_{N,L} without building the whole table
/// (column extraction; O(N L b) word work, O(L) memory).
mpz_class jammed_count(const ModelParams& params, std::int64_t n, std::int64_t l);

/// k-mer deposition counts from F_k(x,y) = (1-y^k)/(1 - y - x^k y^k + x^k y^{2k}).
/// Here N counts occupied sites, so keys are multiples of k.
CoeffTable kmer_counts(int k, int l_max);

/// Row sums J_L = sum_N J_{N,L} (equivalently F_b(1,y)).
std::vector<mpz_class> total_counts(const ModelParams& params, int l_max);

/// y_b: the root in (1/2, 1) of 1 - y^{b+1}(1 + y + ... + y^b), found by
/// bisection to 1e-14; w_b = 1/y_b is the exponential growth rate of J_L.
struct GrowthRate {
  int b;
  double y_b;
  double w_b;
};

/// When verify_empirically is set, also builds J_L up to L = 240 and checks
/// J_{L+1}/J_L against w_b at 1e-6 (throws std::logic_error on mismatch).
GrowthRate growth_rate(const ModelParams& params, bool verify_empirically = true);

/// sum over all lengths of J_{N,L} for fixed N >= 1; the support is finite
/// ((b+1)N - b <= L <= (2b+1)N). Verifies the closed universe identity
/// sum = (b+1)^{N+1} and throws std::logic_error if it fails. The identity
/// does not hold for N = 0 (the sum is 1), so N = 0 is rejected.
mpz_class sum_over_lengths(const ModelParams& params, int n);

/// ln of a positive big integer, accurate to ~1e-15 relative.
double log_mpz(const mpz_class& v);

}  // namespace rydberg
