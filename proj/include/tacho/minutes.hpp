#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tacho/timeline.hpp"

namespace tacho {

/// How "DRIVING is registered" for the neighbours of a minute is read.
enum class Rule51Semantics {
    NeighborRaw,     ///< neighbour counts only if every second of it is driving
    NeighborRule52,  ///< neighbour judged by its longest-run label, one pass
    Fixpoint,        ///< re-apply the sandwich relabelling until nothing changes
};

/// One label per complete calendar minute on a grid.
struct MinuteTrace {
    std::int64_t start_minute = 0;  ///< minute m covers [60m + offset, 60m + offset + 60)
    std::int64_t grid_offset = 0;
    std::vector<Activity> labels;

    [[nodiscard]] std::int64_t size() const { return static_cast<std::int64_t>(labels.size()); }
    [[nodiscard]] Instant minute_start(std::int64_t i) const {
        return Instant{(start_minute + i) * kSecondsPerMinute + grid_offset};
    }
    [[nodiscard]] Instant start() const { return minute_start(0); }
    [[nodiscard]] Instant end() const { return minute_start(size()); }

    [[nodiscard]] std::int64_t count(Activity a) const {
        std::int64_t n = 0;
        for (auto l : labels) n += (l == a);
        return n;
    }

    friend bool operator==(const MinuteTrace&, const MinuteTrace&) = default;
};

class LabelingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct MinuteWindow {
    std::int64_t first_minute = 0;
    std::int64_t count = 0;
};

inline MinuteWindow complete_minutes(const SecondTrace& trace, TimeGrid grid) {
    const auto off = grid.minute_offset_seconds;
    // first m with 60m + off >= start, last m with 60m + off + 60 <= end
    const auto first = -floor_div(-(trace.start.seconds - off), kSecondsPerMinute);
    const auto last_excl = floor_div(trace.end().seconds - off, kSecondsPerMinute);
    if (trace.samples.empty() || last_excl <= first)
        throw LabelingError("trace covers no complete minute on grid offset " + std::to_string(off));
    return {first, last_excl - first};
}

/// Longest continuous activity in [from, from+60); ties go to the latest run.
inline Activity longest_run_label(const SecondTrace& trace, Instant from) {
    auto base = static_cast<std::size_t>(from - trace.start);
    Activity best = trace.samples[base];
    std::int64_t best_len = 0;
    std::int64_t i = 0;
    while (i < kSecondsPerMinute) {
        const Activity a = trace.samples[base + static_cast<std::size_t>(i)];
        std::int64_t j = i;
        while (j < kSecondsPerMinute && trace.samples[base + static_cast<std::size_t>(j)] == a) ++j;
        if (j - i >= best_len) {
            best_len = j - i;
            best = a;
        }
        i = j;
    }
    return best;
}

inline bool all_driving(const SecondTrace& trace, Instant from) {
    auto base = static_cast<std::size_t>(from - trace.start);
    for (std::size_t k = 0; k < static_cast<std::size_t>(kSecondsPerMinute); ++k)
        if (trace.samples[base + k] != Activity::Driving) return false;
    return true;
}

/// Sandwich relabelling against a fixed neighbour predicate. Returns true if anything changed.
template <typename IsDriving>
bool relabel_sandwiched(std::vector<Activity>& labels, IsDriving&& neighbour_driving) {
    bool changed = false;
    std::vector<Activity> out = labels;
    for (std::size_t i = 1; i + 1 < labels.size(); ++i) {
        if (labels[i] != Activity::Driving && neighbour_driving(i - 1) && neighbour_driving(i + 1)) {
            out[i] = Activity::Driving;
            changed = true;
        }
    }
    labels = std::move(out);
    return changed;
}

}  // namespace detail

/// Each complete minute gets its longest continuous activity (latest of equally long runs).
/// Partial minutes at either edge of the trace are dropped.
inline MinuteTrace label_rule52(const SecondTrace& trace, TimeGrid grid) {
    const auto win = detail::complete_minutes(trace, grid);
    MinuteTrace mt;
    mt.start_minute = win.first_minute;
    mt.grid_offset = grid.minute_offset_seconds;
    mt.labels.reserve(static_cast<std::size_t>(win.count));
    for (std::int64_t i = 0; i < win.count; ++i)
        mt.labels.push_back(detail::longest_run_label(trace, mt.minute_start(i)));
    return mt;
}

/// Longest-run labelling followed by the driving-sandwich override. The first and last minutes
/// lack a neighbour on one side and are never overridden.
inline MinuteTrace label_minutes(const SecondTrace& trace, TimeGrid grid, Rule51Semantics sem) {
    MinuteTrace mt = label_rule52(trace, grid);
    switch (sem) {
    case Rule51Semantics::NeighborRule52: {
        const auto base = mt.labels;
        detail::relabel_sandwiched(mt.labels, [&](std::size_t k) { return base[k] == Activity::Driving; });
        break;
    }
    case Rule51Semantics::NeighborRaw: {
        std::vector<bool> raw(mt.labels.size());
        for (std::size_t k = 0; k < raw.size(); ++k)
            raw[k] = detail::all_driving(trace, mt.minute_start(static_cast<std::int64_t>(k)));
        detail::relabel_sandwiched(mt.labels, [&](std::size_t k) { return raw[k]; });
        break;
    }
    case Rule51Semantics::Fixpoint: {
        // each pass only adds driving labels, so at most size() passes
        for (std::int64_t pass = 0; pass < mt.size(); ++pass) {
            const auto base = mt.labels;
            if (!detail::relabel_sandwiched(mt.labels, [&](std::size_t k) { return base[k] == Activity::Driving; }))
                break;
        }
        break;
    }
    }
    return mt;
}

/// Expands minute labels back to seconds (60 per minute) for serialisation.
inline SecondTrace to_second_trace(const MinuteTrace& mt) {
    SecondTrace t;
    t.start = mt.start();
    t.samples.reserve(mt.labels.size() * kSecondsPerMinute);
    for (auto a : mt.labels) append(t, a, kSecondsPerMinute);
    return t;
}

}  // namespace tacho
