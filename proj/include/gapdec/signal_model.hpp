#ifndef GAPDEC_SIGNAL_MODEL_HPP
#define GAPDEC_SIGNAL_MODEL_HPP

#include <cstddef>
#include <vector>

namespace gapdec {

/// One channel's retained samples. Times are seconds, strictly increasing;
/// values are in arbitrary amplitude units. Gaps are simply absent entries.
struct TimeStampedSeries {
  std::vector<double> times;
  std::vector<double> values;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
};

/// Throws Error if times/values lengths differ or times are not strictly
/// increasing.
void validate_series(const TimeStampedSeries& series);

/// A multichannel recording of fixed nominal duration. All channels share one
/// retention pattern: removal always affects whole sampling instants, so the
/// time stamp vectors are identical across channels.
struct Trial {
  std::vector<TimeStampedSeries> channels;
  double sample_rate = 0.0;       // Hz
  double nominal_duration = 0.0;  // seconds
  int label = 0;                  // 0 = left, 1 = right
  int subject_id = 0;
  int session_id = 0;
  int trial_index = 0;

  std::size_t channel_count() const { return channels.size(); }
  /// Number of retained sampling instants (identical across channels).
  std::size_t retained_instants() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  /// Nominal instants = sample_rate * nominal_duration, rounded.
  std::size_t total_instants() const;
};

/// Checks the Trial invariants: per-channel series valid, identical time
/// stamps across channels, all stamps in [0, nominal_duration).
void validate_trial(const Trial& trial);

/// A windowed slice of a trial. Times stay absolute (trial clock); every
/// stamp lies in [window_start, window_start + window_length).
struct Segment {
  std::vector<TimeStampedSeries> channels;
  double window_start = 0.0;
  double window_length = 0.0;

  /// Retained samples in this window (identical across channels).
  std::size_t sample_count() const {
    return channels.empty() ? 0 : channels.front().size();
  }
};

struct SegmentationSpec {
  double window_length = 1.0;      // seconds
  double overlap_fraction = 0.875; // in [0, 1)
  int expected_count = -1;         // < 0 means unspecified
};

/// Cuts a trial into overlapping windows. Window starts are
/// k * (1 - overlap) * window_length in continuous time, so a 4 s trial with
/// 1 s windows at 87.5% overlap yields exactly 25 segments. Windows are
/// half-open [start, start + length); a segment may be empty if every sample
/// in its window was removed.
///
/// Throws WindowTooLong if window_length > nominal_duration, Error if
/// expected_count is set and the computed count differs.
std::vector<Segment> segment_trial(const Trial& trial, const SegmentationSpec& spec);

/// Retained instants divided by the nominal instant count. In [0, 1].
double retained_fraction(const Trial& trial);

}  // namespace gapdec

#endif
