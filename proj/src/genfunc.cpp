#include "rydberg/genfunc.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace rydberg {

namespace {

// Truncated bivariate power series: index = y-degree, map x-degree -> coeff.
using Series = std::vector<std::map<int, mpz_class>>;

Series unit_series(int l_max) {
  Series s(l_max + 1);
  s[0][0] = 1;
  return s;
}

Series multiply(const Series& s, const std::vector<SeriesTerm>& poly, int l_max) {
  Series out(l_max + 1);
  for (int l = 0; l <= l_max && l < static_cast<int>(s.size()); ++l) {
    for (const auto& [n, c] : s[l]) {
      for (const SeriesTerm& t : poly) {
        const int ly = l + t.y_deg;
        if (ly > l_max) continue;
        out[ly][n + t.x_deg] += c * t.coeff;
      }
    }
  }
  for (auto& row : out)
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void add_into(Series& dst, const Series& src) {
  for (std::size_t l = 0; l < src.size(); ++l)
    for (const auto& [n, c] : src[l]) dst[l][n] += c;
}

CoeffTable to_table(int b, int l_max, Series&& s) {
  CoeffTable t;
  t.b = b;
  t.l_max = l_max;
  t.rows.resize(l_max + 1);
  for (int l = 0; l <= l_max; ++l) {
    for (auto& [n, c] : s[l])
      if (c != 0) t.rows[l][n] = std::move(c);
  }
  return t;
}

// geo_pow_coeff: [y^m] (1 + y + ... + y^b)^p, exact.
mpz_class geo_pow_coeff(int b, std::int64_t p, std::int64_t m) {
  if (m < 0 || m > b * p) return 0;
  std::vector<mpz_class> cur(1, 1);
  for (std::int64_t step = 0; step < p; ++step) {
    const std::int64_t width = std::min<std::int64_t>(m, static_cast<std::int64_t>(cur.size()) - 1 + b);
    std::vector<mpz_class> next(width + 1);
    // prefix sums make each multiplication by the (b+1)-term factor linear
    std::vector<mpz_class> prefix(cur.size() + 1);
    for (std::size_t j = 0; j < cur.size(); ++j) prefix[j + 1] = prefix[j] + cur[j];
    for (std::int64_t d = 0; d <= width; ++d) {
      const std::int64_t lo = std::max<std::int64_t>(0, d - b);
      const std::int64_t hi = std::min<std::int64_t>(d, static_cast<std::int64_t>(cur.size()) - 1);
      if (lo <= hi) next[d] = prefix[hi + 1] - prefix[lo];
    }
    cur = std::move(next);
  }
  return m < static_cast<std::int64_t>(cur.size()) ? cur[m] : mpz_class(0);
}

}  // namespace

const mpz_class& CoeffTable::at(int n, int l) const {
  static const mpz_class zero = 0;
  if (l < 0 || l > l_max) return zero;
  const auto it = rows[l].find(n);
  return it == rows[l].end() ? zero : it->second;
}

mpz_class CoeffTable::row_total(int l) const {
  mpz_class t = 0;
  if (l >= 0 && l <= l_max)
    for (const auto& [n, c] : rows[l]) t += c;
  return t;
}

void CoeffTable::write_csv(std::ostream& os) const {
  os << "b,N,L,count\n";
  for (int l = 0; l <= l_max; ++l)
    for (const auto& [n, c] : rows[l])
      os << b << ',' << n << ',' << l << ',' << c.get_str() << '\n';
}

BlockEncoding block_encoding(const ModelParams& params) {
  const int b = params.b;
  BlockEncoding enc;
  for (int a = 0; a <= b; ++a) {
    enc.start.push_back({0, a, 1});            // a leading neutrals
    enc.block.push_back({1, b + 1 + a, 1});    // excited atom + (b+a) neutrals
    enc.end.push_back({1, 1 + a, 1});          // excited atom + a neutrals
  }
  return enc;
}

CoeffTable jammed_counts(const ModelParams& params, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  const BlockEncoding enc = block_encoding(params);

  // sum of block^n; terminates since block has y-valuation b+1
  Series acc = unit_series(l_max);
  Series cur = unit_series(l_max);
  while (true) {
    cur = multiply(cur, enc.block, l_max);
    bool empty = true;
    for (const auto& row : cur)
      if (!row.empty()) { empty = false; break; }
    if (empty) break;
    add_into(acc, cur);
  }

  Series f = multiply(multiply(acc, enc.start, l_max), enc.end, l_max);
  f[0][0] += 1;
  return to_table(params.b, l_max, std::move(f));
}

CoeffTable jammed_counts_recurrence(const ModelParams& params, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  const int b = params.b;
  const BlockEncoding enc = block_encoding(params);

  // numerator of F_b over the cleared denominator D = 1 - y - x y^{b+1} + x y^{2b+2}:
  // F_b * D = D + (1-y) * start * end
  const int num_deg = 2 * b + 2;
  Series num = multiply(multiply(unit_series(num_deg), enc.start, num_deg), enc.end, num_deg);
  num = multiply(num, {{0, 0, 1}, {0, 1, -1}}, num_deg);
  num[0][0] += 1;
  num[1][0] -= 1;
  num[b + 1][1] -= 1;
  num[2 * b + 2][1] += 1;

  Series a(l_max + 1);
  for (int l = 0; l <= l_max; ++l) {
    std::map<int, mpz_class> row;
    if (l < static_cast<int>(num.size()))
      for (const auto& [n, c] : num[l]) row[n] += c;
    if (l >= 1)
      for (const auto& [n, c] : a[l - 1]) row[n] += c;
    if (l >= b + 1)
      for (const auto& [n, c] : a[l - b - 1]) row[n + 1] += c;
    if (l >= 2 * b + 2)
      for (const auto& [n, c] : a[l - 2 * b - 2]) row[n + 1] -= c;
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    a[l] = std::move(row);
  }
  return to_table(b, l_max, std::move(a));
}

mpz_class jammed_count(const ModelParams& params, std::int64_t n, std::int64_t l) {
  if (n < 0 || l < 0) return 0;
  if (n == 0) return l == 0 ? 1 : 0;
  // column of the generating function:
  // J_{N,L} = [y^{L-(b+1)N+b}] (1 + y + ... + y^b)^{N+1}
  const std::int64_t m = l - (params.b + 1) * n + params.b;
  return geo_pow_coeff(params.b, n + 1, m);
}

CoeffTable kmer_counts(int k, int l_max) {
  if (k < 2) throw std::invalid_argument("k-mer size must be >= 2");
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");

  // F_k = (1 - y^k) / (1 - q),  q = y + x^k y^k - x^k y^{2k}
  const std::vector<SeriesTerm> q = {{0, 1, 1}, {k, k, 1}, {k, 2 * k, -1}};
  Series acc = unit_series(l_max);
  Series cur = unit_series(l_max);
  while (true) {
    cur = multiply(cur, q, l_max);
    bool empty = true;
    for (const auto& row : cur)
      if (!row.empty()) { empty = false; break; }
    if (empty) break;
    add_into(acc, cur);
  }
  Series f = multiply(acc, {{0, 0, 1}, {0, k, -1}}, l_max);
  return to_table(k, l_max, std::move(f));
}

std::vector<mpz_class> total_counts(const ModelParams& params, int l_max) {
  // univariate recurrence from F_b(1,y): same cleared denominator at x = 1
  const int b = params.b;
  CoeffTable num_table = [&] {
    const BlockEncoding enc = block_encoding(params);
    const int num_deg = 2 * b + 2;
    Series num = multiply(multiply(unit_series(num_deg), enc.start, num_deg), enc.end, num_deg);
    num = multiply(num, {{0, 0, 1}, {0, 1, -1}}, num_deg);
    num[0][0] += 1;
    num[1][0] -= 1;
    num[b + 1][1] -= 1;
    num[2 * b + 2][1] += 1;
    return to_table(b, num_deg, std::move(num));
  }();

  std::vector<mpz_class> j(l_max + 1, 0);
  for (int l = 0; l <= l_max; ++l) {
    mpz_class v = num_table.row_total(l);
    if (l >= 1) v += j[l - 1];
    if (l >= b + 1) v += j[l - b - 1];
    if (l >= 2 * b + 2) v -= j[l - 2 * b - 2];
    j[l] = std::move(v);
  }
  return j;
}

double log_mpz(const mpz_class& v) {
  if (v <= 0) throw std::domain_error("log of non-positive integer");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

GrowthRate growth_rate(const ModelParams& params, bool verify_empirically) {
  const int b = params.b;
  const auto denom = [b](double y) {
    // 1 - y^{b+1} (1 + y + ... + y^b), evaluated without cancellation surprises
    double geo = 0.0;
    for (int i = b; i >= 0; --i) geo = geo * y + 1.0;
    return 1.0 - std::pow(y, b + 1) * geo;
  };

  double lo = 0.5, hi = 1.0;  // denom(0.5) > 0, denom(1) = -b < 0
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (denom(mid) > 0.0 ? lo : hi) = mid;
  }
  const double y_b = 0.5 * (lo + hi);
  const GrowthRate g{b, y_b, 1.0 / y_b};

  if (verify_empirically) {
    const int l_check = 240;
    const std::vector<mpz_class> j = total_counts(params, l_check);
    const double ratio_log = log_mpz(j[l_check]) - log_mpz(j[l_check - 1]);
    if (std::abs(ratio_log - std::log(g.w_b)) > 1e-6)
      throw std::logic_error("growth rate mismatch: J_{L+1}/J_L does not approach w_b");
  }
  return g;
}

mpz_class sum_over_lengths(const ModelParams& params, int n) {
  if (n < 1)
    throw std::invalid_argument("closed-universe identity holds for N >= 1 only "
                                "(the N = 0 sum is 1, not b+1)");
  const int b = params.b;
  const int l_hi = (2 * b + 1) * n;
  const CoeffTable table = jammed_counts(params, l_hi);
  mpz_class sum = 0;
  for (int l = 0; l <= l_hi; ++l) sum += table.at(n, l);

  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), b + 1, n + 1);
  if (sum != expected)
    throw std::logic_error("closed-universe identity violated for N = " + std::to_string(n));
  return sum;
}

}  // namespace rydberg
