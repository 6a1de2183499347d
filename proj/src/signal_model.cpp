#include "gapdec/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapdec/errors.hpp"

namespace gapdec {

void validate_series(const TimeStampedSeries& series) {
  if (series.times.size() != series.values.size())
    throw Error("series: times and values lengths differ (" +
                std::to_string(series.times.size()) + " vs " +
                std::to_string(series.values.size()) + ")");
  for (std::size_t i = 1; i < series.times.size(); ++i)
    if (!(series.times[i] > series.times[i - 1]))
      throw Error("series: times not strictly increasing at index " +
                  std::to_string(i));
}

std::size_t Trial::total_instants() const {
  return static_cast<std::size_t>(std::llround(sample_rate * nominal_duration));
}

void validate_trial(const Trial& trial) {
  if (trial.sample_rate <= 0 || trial.nominal_duration <= 0)
    throw Error("trial: sample_rate and nominal_duration must be positive");
  if (trial.channels.empty()) throw Error("trial: no channels");
  for (const auto& ch : trial.channels) validate_series(ch);
  const auto& ref = trial.channels.front().times;
  for (std::size_t c = 1; c < trial.channels.size(); ++c)
    if (trial.channels[c].times != ref)
      throw Error("trial: channel " + std::to_string(c) +
                  " time stamps differ from channel 0");
  for (double t : ref)
    if (t < 0.0 || t >= trial.nominal_duration)
      throw Error("trial: time stamp " + std::to_string(t) +
                  " outside [0, duration)");
}

std::vector<Segment> segment_trial(const Trial& trial, const SegmentationSpec& spec) {
  if (spec.window_length > trial.nominal_duration)
    throw WindowTooLong("window_length " + std::to_string(spec.window_length) +
                        " s exceeds trial duration " +
                        std::to_string(trial.nominal_duration) + " s");
  if (!(spec.overlap_fraction >= 0.0 && spec.overlap_fraction < 1.0))
    throw Error("segmentation: overlap_fraction must lie in [0, 1)");

  const double step = (1.0 - spec.overlap_fraction) * spec.window_length;
  // Continuous-time stepping; the epsilon absorbs representation error in
  // (duration - window)/step when the quotient is an exact integer.
  const int count = static_cast<int>(
      std::floor((trial.nominal_duration - spec.window_length) / step + 1e-9)) + 1;
  if (spec.expected_count >= 0 && count != spec.expected_count)
    throw Error("segmentation: computed " + std::to_string(count) +
                " segments, expected " + std::to_string(spec.expected_count));

  const auto& times = trial.channels.empty() ? std::vector<double>{}
                                             : trial.channels.front().times;
  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double start = static_cast<double>(k) * step;
    const double stop = start + spec.window_length;
    auto lo = std::lower_bound(times.begin(), times.end(), start);
    auto hi = std::lower_bound(times.begin(), times.end(), stop);
    const std::size_t i0 = static_cast<std::size_t>(lo - times.begin());
    const std::size_t i1 = static_cast<std::size_t>(hi - times.begin());

    Segment seg;
    seg.window_start = start;
    seg.window_length = spec.window_length;
    seg.channels.reserve(trial.channels.size());
    for (const auto& ch : trial.channels) {
      TimeStampedSeries s;
      s.times.assign(ch.times.begin() + i0, ch.times.begin() + i1);
      s.values.assign(ch.values.begin() + i0, ch.values.begin() + i1);
      seg.channels.push_back(std::move(s));
    }
    segments.push_back(std::move(seg));
  }
  return segments;
}

double retained_fraction(const Trial& trial) {
  if (trial.sample_rate <= 0 || trial.nominal_duration <= 0)
    throw Error("retained_fraction: sample_rate and nominal_duration must be positive");
  const std::size_t total = trial.total_instants();
  if (total == 0) throw Error("retained_fraction: zero nominal instants");
  return static_cast<double>(trial.retained_instants()) / static_cast<double>(total);
}

}  // namespace gapdec
