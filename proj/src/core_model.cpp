#include "rydberg/core_model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rydberg {

ModelParams::ModelParams(int blockade_range) : b(blockade_range) {
  if (b < 1) throw std::invalid_argument("blockade range b must be >= 1");
}

std::int64_t Configuration::excited_count() const {
  return std::count(sites.begin(), sites.end(), Site::excited);
}

Configuration Configuration::from_string(std::string_view s) {
  Configuration c;
  c.sites.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '1':
      case '*': c.sites.push_back(Site::excited); break;
      case '0':
      case '.': c.sites.push_back(Site::neutral); break;
      default: throw std::invalid_argument("configuration string: expected 0/1 or ./*");
    }
  }
  return c;
}

std::string Configuration::to_string() const {
  std::string s;
  s.reserve(sites.size());
  for (Site x : sites) s.push_back(x == Site::excited ? '1' : '0');
  return s;
}

std::uint64_t JammedCounts::total() const {
  std::uint64_t t = 0;
  for (const auto& [n, c] : by_excited) t += c;
  return t;
}

bool is_blockade_valid(const Configuration& config, const ModelParams& params) {
  std::int64_t prev = -1;
  for (std::int64_t i = 0; i < config.length(); ++i) {
    if (config.sites[i] != Site::excited) continue;
    if (prev >= 0 && i - prev < params.b + 1) return false;
    prev = i;
  }
  return true;
}

bool is_jammed(const Configuration& config, const ModelParams& params) {
  if (!is_blockade_valid(config, params)) return false;
  const std::int64_t L = config.length();
  const int b = params.b;

  std::int64_t prev = -1;
  bool any_excited = false;
  for (std::int64_t i = 0; i < L; ++i) {
    if (config.sites[i] != Site::excited) continue;
    const std::int64_t run = prev < 0 ? i : i - prev - 1;
    if (prev < 0) {
      if (run > b) return false;  // left boundary run
    } else {
      if (run > 2 * b) return false;  // interior run (>= b by validity)
    }
    prev = i;
    any_excited = true;
  }
  if (!any_excited) return L == 0;
  return L - 1 - prev <= b;  // right boundary run
}

namespace {

// covered(m): sites within distance b of an excited site, window-clipped to L bits.
inline std::uint64_t coverage(std::uint64_t m, int b, std::uint64_t full) {
  std::uint64_t c = m;
  for (int d = 1; d <= b; ++d) c |= (m << d) | (m >> d);
  return c & full;
}

inline bool mask_valid(std::uint64_t m, int b) {
  for (int d = 1; d <= b; ++d)
    if (m & (m >> d)) return false;
  return true;
}

void check_cap(int length, int scan_cap) {
  if (length < 0) throw std::invalid_argument("length must be >= 0");
  if (length > scan_cap)
    throw std::invalid_argument("brute-force enumeration limited to L <= " +
                                std::to_string(scan_cap) + " (got L = " +
                                std::to_string(length) + "); raise the cap explicitly or use "
                                "the generating-function route");
}

}  // namespace

JammedCounts enumerate_jammed(int length, const ModelParams& params, int scan_cap) {
  check_cap(length, scan_cap);
  JammedCounts out;
  if (length == 0) {
    out.by_excited[0] = 1;
    return out;
  }
  const std::uint64_t full = (length == 64) ? ~0ull : ((1ull << length) - 1);
  const int b = params.b;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (!mask_valid(m, b)) continue;
    if (coverage(m, b, full) != full) continue;
    ++out.by_excited[std::popcount(m)];
  }
  return out;
}

std::vector<Configuration> enumerate_jammed_configs(int length, const ModelParams& params,
                                                    int scan_cap) {
  check_cap(length, scan_cap);
  std::vector<Configuration> out;
  if (length == 0) {
    out.push_back(Configuration{});
    return out;
  }
  const std::uint64_t full = (1ull << length) - 1;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (!mask_valid(m, params.b)) continue;
    if (coverage(m, params.b, full) != full) continue;
    Configuration c;
    c.sites.resize(length, Site::neutral);
    for (int i = 0; i < length; ++i)
      if (m & (1ull << i)) c.sites[i] = Site::excited;
    out.push_back(std::move(c));
  }
  return out;
}

Density density(const Configuration& config) {
  if (config.length() == 0) throw std::domain_error("density undefined for the empty configuration");
  return Density{config.excited_count(), config.length()};
}

std::vector<int> gap_sequence(const Configuration& config, const ModelParams& params) {
  if (!is_jammed(config, params))
    throw std::invalid_argument("gap decomposition requires a jammed configuration");
  std::vector<int> gaps;
  std::int64_t prev = -1;
  for (std::int64_t i = 0; i < config.length(); ++i) {
    if (config.sites[i] != Site::excited) continue;
    gaps.push_back(static_cast<int>(prev < 0 ? i : i - prev - 1 - params.b));
    prev = i;
  }
  return gaps;
}

GapProfile gap_profile(const Configuration& config, const ModelParams& params) {
  const std::vector<int> gaps = gap_sequence(config, params);  // throws if not jammed
  GapProfile p;
  p.counts.assign(params.b + 1, 0);
  for (int a : gaps) ++p.counts[a];

  std::int64_t prev = -1;
  for (std::int64_t i = 0; i < config.length(); ++i)
    if (config.sites[i] == Site::excited) prev = i;
  p.end_gap = prev < 0 ? 0 : static_cast<int>(config.length() - 1 - prev);
  p.truncated_end = prev >= 0 && p.end_gap < params.b;
  return p;
}

Configuration reconstruct_from_gaps(std::span<const int> gaps, const ModelParams& params,
                                    int end_gap) {
  if (end_gap < 0 || end_gap > params.b)
    throw std::invalid_argument("end gap must lie in [0, b]");
  Configuration c;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < 0 || gaps[i] > params.b)
      throw std::invalid_argument("gaps must lie in [0, b]");
    c.sites.insert(c.sites.end(), gaps[i], Site::neutral);
    c.sites.push_back(Site::excited);
    const int tail = (i + 1 == gaps.size()) ? end_gap : params.b;
    c.sites.insert(c.sites.end(), tail, Site::neutral);
  }
  return c;
}

std::pair<std::int64_t, std::int64_t> excited_count_bounds(std::int64_t length,
                                                           const ModelParams& params) {
  const std::int64_t lo = (length + 2 * params.b) / (2 * params.b + 1);
  const std::int64_t hi = (length + params.b) / (params.b + 1);
  return {lo, hi};
}

}  // namespace rydberg
