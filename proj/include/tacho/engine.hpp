#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "tacho/minutes.hpp"
#include "tacho/periods.hpp"
#include "tacho/profile.hpp"
#include "tacho/profiles.hpp"
#include "tacho/rules.hpp"
#include "tacho/timeline.hpp"

namespace tacho {

struct Statistics {
    std::int64_t minutes = 0;
    std::int64_t driving_minutes = 0;
    std::int64_t rest_minutes = 0;
    std::int64_t other_work_minutes = 0;
    std::int64_t peak_driving_period = 0;
    std::int64_t breaks = 0;
    std::int64_t daily_rests = 0;
    std::int64_t weekly_rests = 0;

    friend bool operator==(const Statistics&, const Statistics&) = default;
};

struct Report {
    std::string trace_digest;
    InterpretationProfile profile;
    MinuteTrace minutes;
    Statistics stats;
    std::vector<Period> rests;
    std::vector<DailyDrivingSpan> spans;
    std::vector<std::pair<std::int64_t, bool>> weekly_rest_verdicts;
    std::vector<Violation> violations;
    std::vector<std::string> notices;

    [[nodiscard]] std::vector<Violation> violations_for(const std::string& article) const {
        std::vector<Violation> v;
        for (const auto& x : violations)
            if (x.article == article) v.push_back(x);
        return v;
    }
};

/// 64-bit FNV-1a of the run-length text form, as 16 hex digits.
inline std::string trace_digest(const SecondTrace& trace) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : format_trace(trace)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Labels minutes on the profile's grid, segments rests and driving, and runs every check.
inline Report check_all(const SecondTrace& trace, const InterpretationProfile& profile, const LeapTable& leaps = {}) {
    Report r;
    r.trace_digest = trace_digest(trace);
    r.profile = profile;
    r.minutes = label_minutes(trace, profile.grid(), profile.rule51);

    const WeekCalendar calendar(profile.leap_week_policy, leaps);
    // Surfaces a missing Sunday 24:00 under the letter policy for any week the trace touches.
    for (auto w = calendar.week_of(r.minutes.start()).index; w <= calendar.week_of(r.minutes.end() - 1).index; ++w)
        (void)calendar.week_of(calendar.week_start(w));

    r.rests = classify_rests(r.minutes, profile);
    const auto acc = accumulate_driving(r.minutes, r.rests);
    r.spans = daily_driving_spans(r.minutes, r.rests, profile);

    auto append = [&](std::vector<Violation> v) { r.violations.insert(r.violations.end(), v.begin(), v.end()); };
    append(check_article61(r.spans, calendar, profile));
    append(check_article7(acc, profile.id));
    append(check_article82(r.rests, r.minutes, profile));
    auto weekly = check_article86(r.minutes, calendar, profile);
    append(weekly.violations);
    r.notices = weekly.notices;
    r.weekly_rest_verdicts = weekly.week_verdicts;

    std::stable_sort(r.violations.begin(), r.violations.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.start, a.article, a.end) < std::tie(b.start, b.article, b.end);
    });

    auto& s = r.stats;
    s.minutes = r.minutes.size();
    s.driving_minutes = r.minutes.count(Activity::Driving);
    s.rest_minutes = r.minutes.count(Activity::Rest);
    s.other_work_minutes = r.minutes.count(Activity::OtherWork);
    s.peak_driving_period = peak(acc);
    for (const auto& p : r.rests) {
        s.breaks += p.kind == PeriodKind::Break;
        s.daily_rests += p.kind == PeriodKind::DailyRest;
        s.weekly_rests += p.is_weekly();
    }
    return r;
}

inline nlohmann::ordered_json to_json(const Violation& v) {
    nlohmann::ordered_json j;
    j["article"] = v.article;
    j["start"] = v.start.seconds;
    j["end"] = v.end.seconds;
    j["detail"] = v.detail;
    j["profile_id"] = v.profile_id;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["trace_digest"] = r.trace_digest;
    j["profile"] = to_json(r.profile);

    nlohmann::ordered_json st;
    st["minutes"] = r.stats.minutes;
    st["driving_minutes"] = r.stats.driving_minutes;
    st["rest_minutes"] = r.stats.rest_minutes;
    st["other_work_minutes"] = r.stats.other_work_minutes;
    st["peak_driving_period"] = r.stats.peak_driving_period;
    st["breaks"] = r.stats.breaks;
    st["daily_rests"] = r.stats.daily_rests;
    st["weekly_rests"] = r.stats.weekly_rests;
    st["daily_driving_spans"] = r.spans.size();
    j["statistics"] = st;

    auto rests = nlohmann::ordered_json::array();
    for (const auto& p : r.rests) {
        nlohmann::ordered_json e;
        e["kind"] = to_string(p.kind);
        e["start"] = p.start.seconds;
        e["end"] = p.end.seconds;
        e["minutes"] = p.minutes;
        rests.push_back(e);
    }
    j["rests"] = rests;

    auto spans = nlohmann::ordered_json::array();
    for (const auto& s : r.spans) {
        nlohmann::ordered_json e;
        e["start"] = s.start.seconds;
        e["end"] = s.end.seconds;
        e["driving_minutes"] = s.driving_minutes;
        e["before"] = to_string(s.before);
        e["after"] = to_string(s.after);
        spans.push_back(e);
    }
    j["daily_driving_spans"] = spans;

    auto weeks = nlohmann::ordered_json::array();
    for (auto [w, legal] : r.weekly_rest_verdicts) {
        nlohmann::ordered_json e;
        e["week"] = w;
        e["legal"] = legal;
        weeks.push_back(e);
    }
    j["weekly_rest_verdicts"] = weeks;

    auto vs = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) vs.push_back(to_json(v));
    j["violations"] = vs;
    j["notices"] = r.notices;
    return j;
}

}  // namespace tacho
