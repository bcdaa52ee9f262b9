#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tacho {

enum class Activity : std::uint8_t { Driving, Rest, OtherWork };

inline std::string_view to_string(Activity a) {
    switch (a) {
    case Activity::Driving: return "DRIVING";
    case Activity::Rest: return "REST";
    case Activity::OtherWork: return "OTHER_WORK";
    }
    return "?";
}

inline constexpr std::int64_t kSecondsPerMinute = 60;
inline constexpr std::int64_t kSecondsPerHour = 3600;
inline constexpr std::int64_t kSecondsPerDay = 86400;
inline constexpr std::int64_t kSecondsPerWeek = 7 * kSecondsPerDay;

/// Whole seconds elapsed since the epoch. The epoch is a Monday 00:00.
struct Instant {
    std::int64_t seconds = 0;

    friend constexpr auto operator<=>(Instant, Instant) = default;
    friend constexpr Instant operator+(Instant t, std::int64_t s) { return {t.seconds + s}; }
    friend constexpr Instant operator-(Instant t, std::int64_t s) { return {t.seconds - s}; }
    friend constexpr std::int64_t operator-(Instant a, Instant b) { return a.seconds - b.seconds; }
};

/// Floor division; the standard `/` truncates toward zero.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

/// One activity per second, contiguous from `start`.
struct SecondTrace {
    Instant start;
    std::vector<Activity> samples;

    [[nodiscard]] Instant end() const { return start + static_cast<std::int64_t>(samples.size()); }
    [[nodiscard]] std::int64_t size() const { return static_cast<std::int64_t>(samples.size()); }
    [[nodiscard]] Activity at(Instant t) const { return samples.at(static_cast<std::size_t>(t - start)); }

    friend bool operator==(const SecondTrace&, const SecondTrace&) = default;
};

/// Phase of the minute grid: minute boundaries sit at instants congruent to the offset mod 60.
struct TimeGrid {
    std::int64_t minute_offset_seconds = 0;

    static TimeGrid with_offset(std::int64_t offset) { return {floor_mod(offset, kSecondsPerMinute)}; }
};

class TraceFormatError : public std::runtime_error {
public:
    TraceFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("trace line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline bool parse_i64(std::string_view s, std::int64_t& out) {
    s = trim(s);
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace detail

inline bool parse_activity(std::string_view s, Activity& out) {
    s = detail::trim(s);
    if (s == "DRIVING") out = Activity::Driving;
    else if (s == "REST") out = Activity::Rest;
    else if (s == "OTHER_WORK") out = Activity::OtherWork;
    else return false;
    return true;
}

/// Parses `start_second,ACTIVITY,duration_seconds` records. Blank lines and `#` comments are skipped.
inline SecondTrace parse_trace(std::string_view text) {
    SecondTrace trace;
    bool have_first = false;
    std::int64_t expected = 0;
    std::size_t line_no = 0;

    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        line = detail::trim(line);
        if (line.empty() || line.front() == '#') continue;

        auto c1 = line.find(',');
        auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
            throw TraceFormatError(line_no, "expected three comma-separated fields");

        std::int64_t start = 0;
        std::int64_t duration = 0;
        Activity act{};
        if (!detail::parse_i64(line.substr(0, c1), start))
            throw TraceFormatError(line_no, "bad start second");
        if (!parse_activity(line.substr(c1 + 1, c2 - c1 - 1), act))
            throw TraceFormatError(line_no, "unknown activity code '" +
                                                std::string(detail::trim(line.substr(c1 + 1, c2 - c1 - 1))) + "'");
        if (!detail::parse_i64(line.substr(c2 + 1), duration) || duration <= 0)
            throw TraceFormatError(line_no, "duration must be a positive integer");

        if (!have_first) {
            trace.start = Instant{start};
            expected = start;
            have_first = true;
        } else if (start < expected) {
            throw TraceFormatError(line_no, "non-monotone timestamp " + std::to_string(start));
        } else if (start > expected) {
            throw TraceFormatError(line_no, "gap between " + std::to_string(expected) + " and " +
                                                std::to_string(start));
        }
        trace.samples.insert(trace.samples.end(), static_cast<std::size_t>(duration), act);
        expected = start + duration;
    }
    if (!have_first) throw TraceFormatError(line_no, "trace has no records");
    return trace;
}

/// Run-length text form, one record per maximal run.
inline std::string format_trace(const SecondTrace& trace) {
    std::string out;
    std::size_t i = 0;
    const auto n = trace.samples.size();
    while (i < n) {
        std::size_t j = i;
        while (j < n && trace.samples[j] == trace.samples[i]) ++j;
        out += std::to_string(trace.start.seconds + static_cast<std::int64_t>(i));
        out += ',';
        out += to_string(trace.samples[i]);
        out += ',';
        out += std::to_string(j - i);
        out += '\n';
        i = j;
    }
    return out;
}

/// Same recording, displaced on the timeline. Compares readings on differently phased clocks.
inline SecondTrace shift_grid(const SecondTrace& trace, std::int64_t offset) {
    return SecondTrace{trace.start + offset, trace.samples};
}

/// Appends `seconds` of `a` to a trace under construction.
inline void append(SecondTrace& trace, Activity a, std::int64_t seconds) {
    if (seconds <= 0) throw std::invalid_argument("append: non-positive duration");
    trace.samples.insert(trace.samples.end(), static_cast<std::size_t>(seconds), a);
}

// ---------------------------------------------------------------------------
// Weeks

enum class LeapWeekPolicy { Letter, Spirit };

/// A leap second inserted (+1) or removed (-1) at the end of the Sunday of week `sunday_index`.
struct LeapSecond {
    std::int64_t sunday_index = 0;
    int delta = 0;
};

using LeapTable = std::vector<LeapSecond>;

class LeapWeekError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WeekIndex {
    std::int64_t index = 0;
    friend constexpr auto operator<=>(WeekIndex, WeekIndex) = default;
};

/// Calendar weeks from Monday 00:00 to Sunday 24:00, with Sunday lengths adjusted by leap seconds.
///
/// Under `Spirit` a week always ends at the end of its own Sunday. Under `Letter` the instant
/// "Sunday 24:00" must exist; a negative leap second on that Sunday removes it and the week is
/// left without an end, which is reported as an error.
class WeekCalendar {
public:
    WeekCalendar() = default;
    WeekCalendar(LeapWeekPolicy policy, LeapTable leaps) : policy_(policy), leaps_(std::move(leaps)) {
        for (const auto& l : leaps_)
            if (l.delta != 1 && l.delta != -1) throw std::invalid_argument("leap second delta must be +1 or -1");
        std::sort(leaps_.begin(), leaps_.end(),
                  [](const LeapSecond& a, const LeapSecond& b) { return a.sunday_index < b.sunday_index; });
    }

    [[nodiscard]] LeapWeekPolicy policy() const { return policy_; }
    [[nodiscard]] const LeapTable& leaps() const { return leaps_; }

    /// First instant of week k.
    [[nodiscard]] Instant week_start(std::int64_t k) const {
        std::int64_t shift = 0;
        for (const auto& l : leaps_)
            if (l.sunday_index < k) shift += l.delta;
        return Instant{k * kSecondsPerWeek + shift};
    }

    /// One past the last instant of week k.
    [[nodiscard]] Instant week_end(std::int64_t k) const { return week_start(k + 1); }

    [[nodiscard]] WeekIndex week_of(Instant t) const {
        std::int64_t k = floor_div(t.seconds, kSecondsPerWeek);
        while (week_start(k) > t) --k;
        while (week_start(k + 1) <= t) ++k;
        if (policy_ == LeapWeekPolicy::Letter) {
            for (const auto& l : leaps_)
                if (l.sunday_index == k && l.delta < 0)
                    throw LeapWeekError("week " + std::to_string(k) +
                                        " has no Sunday 24:00 (negative leap second) under the letter policy");
        }
        return WeekIndex{k};
    }

private:
    LeapWeekPolicy policy_ = LeapWeekPolicy::Spirit;
    LeapTable leaps_;
};

inline WeekIndex week_of(Instant t, LeapWeekPolicy policy, const LeapTable& leaps = {}) {
    return WeekCalendar(policy, leaps).week_of(t);
}

}  // namespace tacho
