#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rydberg {

/// Blockade-range convention used throughout this library:
///
///   two excited atoms with site indices i < j are compatible iff j - i >= b + 1,
///   i.e. at least b neutral sites lie strictly between them.
///
/// Everything downstream (enumeration, generating functions, the complexity
/// function) silently depends on this reading, so it is fixed here once.
/// A blockade range of b = 1 therefore forbids adjacent excited atoms and
/// nothing else.
struct ModelParams {
  int b;

  explicit ModelParams(int blockade_range);
};

enum class Site : std::uint8_t { neutral = 0, excited = 1 };

/// A finite chain of sites. Length 0 is the empty configuration, which is
/// valid and jammed by convention.
struct Configuration {
  std::vector<Site> sites;

  std::int64_t length() const { return static_cast<std::int64_t>(sites.size()); }
  std::int64_t excited_count() const;

  bool operator==(const Configuration&) const = default;

  /// Parses '1'/'*' as excited and '0'/'.' as neutral.
  static Configuration from_string(std::string_view s);
  std::string to_string() const;  // '1' excited, '0' neutral
};

/// Exact density N/L of a configuration (kept unreduced).
struct Density {
  std::int64_t excited;
  std::int64_t length;

  double value() const { return static_cast<double>(excited) / static_cast<double>(length); }
};

/// Histogram M_0..M_b of the neutral gaps preceding each excited-atom block,
/// plus the state of the right edge. end_gap is the number of neutral sites
/// after the last excited atom; the profile identities
///   sum M_a = N   and   sum a*M_a = L - (b+1)N
/// hold exactly when truncated_end is false (end_gap == b).
struct GapProfile {
  std::vector<std::int64_t> counts;
  bool truncated_end = false;
  int end_gap = 0;
};

/// Counts of jammed configurations of one length, keyed by excited-atom count.
struct JammedCounts {
  std::map<std::int64_t, std::uint64_t> by_excited;

  std::uint64_t total() const;
};

bool is_blockade_valid(const Configuration& config, const ModelParams& params);

/// True iff no neutral site can be excited without breaking the blockade.
/// Equivalent interior/boundary run characterization: every neutral run
/// strictly between excited atoms has length in [b, 2b] and every boundary
/// run has length in [0, b]. An all-neutral configuration is jammed only
/// for L = 0.
bool is_jammed(const Configuration& config, const ModelParams& params);

/// Brute-force oracle: tests all 2^L bitmasks. Throws std::invalid_argument
/// when length exceeds scan_cap (default 26, about 67M masks).
JammedCounts enumerate_jammed(int length, const ModelParams& params, int scan_cap = 26);

/// Same scan, materializing the configurations (intended for small L).
std::vector<Configuration> enumerate_jammed_configs(int length, const ModelParams& params,
                                                    int scan_cap = 26);

/// Throws std::domain_error for the empty configuration.
Density density(const Configuration& config);

/// Gaps a_1..a_N of a jammed configuration (neutral sites in front of each
/// block). Throws std::invalid_argument if the configuration is not jammed.
std::vector<int> gap_sequence(const Configuration& config, const ModelParams& params);

GapProfile gap_profile(const Configuration& config, const ModelParams& params);

/// Inverse of gap_sequence: gaps plus the end gap determine the configuration.
Configuration reconstruct_from_gaps(std::span<const int> gaps, const ModelParams& params,
                                    int end_gap);

/// ceil(L/(2b+1)) and ceil(L/(b+1)): the excited-count window that every
/// jammed configuration of length L falls in.
std::pair<std::int64_t, std::int64_t> excited_count_bounds(std::int64_t length,
                                                           const ModelParams& params);

}  // namespace rydberg
