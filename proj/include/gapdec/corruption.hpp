#ifndef GAPDEC_CORRUPTION_HPP
#define GAPDEC_CORRUPTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gapdec/signal_model.hpp"

namespace gapdec {

enum class RemovalMode { point, block };

const char* removal_mode_name(RemovalMode mode);
RemovalMode removal_mode_from_name(const std::string& name);

/// Artefact-excision simulation parameters. Block widths are drawn from a
/// rounded Normal(block_width_mean, block_width_std) clamped below at 1.
struct RemovalSpec {
  RemovalMode mode = RemovalMode::point;
  double fraction = 0.0;          // removed fraction p, in [0, 0.8]
  double block_width_mean = 20.0; // samples
  double block_width_std = 10.0;  // samples
  std::uint64_t seed = 0;
};

/// Per-instant keep flags for one trial. Removal hits whole sampling instants
/// across all channels at once.
struct RetentionMask {
  std::vector<std::uint8_t> kept;

  std::size_t size() const { return kept.size(); }
  std::size_t removed_count() const;

  /// Run-length text form, e.g. "keep:120 drop:35 keep:845".
  std::string to_rle() const;
  static RetentionMask from_rle(const std::string& text);
};

/// Removes exactly llround(p * total) distinct instants chosen uniformly
/// without replacement. Deterministic per seed.
RetentionMask point_removal(std::size_t total_instants, double p, std::uint64_t seed);

/// Removes contiguous blocks (widths ~ rounded Normal, clamped to [1, total];
/// overlaps allowed) until the removed count reaches llround(p * total), then
/// restores the excess tail of the final block so the count is exact.
RetentionMask block_removal(std::size_t total_instants, double p,
                            const RemovalSpec& spec, std::uint64_t seed);

/// Dispatches on spec.mode using spec.fraction and spec.seed.
RetentionMask make_mask(std::size_t total_instants, const RemovalSpec& spec);

/// Drops masked instants from every channel. The mask length must equal the
/// trial's current retained sample count (masks are positional).
Trial apply_mask(const Trial& trial, const RetentionMask& mask);

}  // namespace gapdec

#endif
