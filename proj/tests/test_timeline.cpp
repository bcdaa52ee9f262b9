#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tacho;
using namespace tacho::testing;

TEST(ParseTrace, SingleRecord) {
    auto t = parse_trace("0,DRIVING,60\n");
    EXPECT_EQ(t.start, Instant{0});
    ASSERT_EQ(t.size(), 60);
    for (auto a : t.samples) EXPECT_EQ(a, D);
}

TEST(ParseTrace, GapIsAnError) {
    EXPECT_THROW(parse_trace("0,DRIVING,60\n120,REST,60\n"), TraceFormatError);
}

TEST(ParseTrace, TwoRecords) {
    auto t = parse_trace("0,REST,30\n30,DRIVING,30\n");
    ASSERT_EQ(t.size(), 60);
    EXPECT_EQ(t.at(Instant{29}), R);
    EXPECT_EQ(t.at(Instant{30}), D);
}

TEST(ParseTrace, CommentsAndBlankLines) {
    auto t = parse_trace("# header\n\n100,OTHER_WORK,5\n  \n105,REST,1\n");
    EXPECT_EQ(t.start, Instant{100});
    EXPECT_EQ(t.size(), 6);
    EXPECT_EQ(t.at(Instant{104}), W);
}

TEST(ParseTrace, Rejections) {
    EXPECT_THROW(parse_trace(""), TraceFormatError);
    EXPECT_THROW(parse_trace("# nothing\n"), TraceFormatError);
    EXPECT_THROW(parse_trace("0,DRIVING\n"), TraceFormatError);
    EXPECT_THROW(parse_trace("0,DRIVING,60,1\n"), TraceFormatError);
    EXPECT_THROW(parse_trace("0,SLEEPING,60\n"), TraceFormatError);
    EXPECT_THROW(parse_trace("0,DRIVING,0\n"), TraceFormatError);
    EXPECT_THROW(parse_trace("0,DRIVING,-5\n"), TraceFormatError);
    EXPECT_THROW(parse_trace("x,DRIVING,5\n"), TraceFormatError);
    EXPECT_THROW(parse_trace("0,DRIVING,60\n30,REST,60\n"), TraceFormatError);
}

TEST(ParseTrace, ErrorCarriesLineNumber) {
    try {
        parse_trace("0,DRIVING,60\n\n60,NOPE,1\n");
        FAIL();
    } catch (const TraceFormatError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(FormatTrace, RoundTripRandom) {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        SecondTrace t;
        t.start = Instant{static_cast<std::int64_t>(rng() % 100000)};
        const int n = 1 + static_cast<int>(rng() % 20);
        for (int i = 0; i < n; ++i) append(t, static_cast<Activity>(rng() % 3), 1 + static_cast<std::int64_t>(rng() % 200));
        EXPECT_EQ(parse_trace(format_trace(t)), t);
    }
}

TEST(FormatTrace, MergesRuns) {
    auto t = runs({{D, 10}, {D, 5}, {R, 3}});
    EXPECT_EQ(format_trace(t), "0,DRIVING,15\n15,REST,3\n");
}

TEST(WeekOf, Anchor) { EXPECT_EQ(week_of(Instant{0}, LeapWeekPolicy::Spirit).index, 0); }

TEST(WeekOf, Boundary) {
    EXPECT_EQ(week_of(Instant{7 * 86400 - 1}, LeapWeekPolicy::Spirit).index, 0);
    EXPECT_EQ(week_of(Instant{7 * 86400}, LeapWeekPolicy::Spirit).index, 1);
    EXPECT_EQ(week_of(Instant{-1}, LeapWeekPolicy::Spirit).index, -1);
}

TEST(WeekOf, LetterPolicyRejectsWeekWithoutSundayMidnight) {
    const LeapTable table{{0, -1}};
    EXPECT_THROW(week_of(Instant{3600}, LeapWeekPolicy::Letter, table), LeapWeekError);
    EXPECT_EQ(week_of(Instant{3600}, LeapWeekPolicy::Spirit, table).index, 0);
    // the removed second shortens week 0 by one
    EXPECT_EQ(week_of(Instant{7 * 86400 - 1}, LeapWeekPolicy::Spirit, table).index, 1);
    EXPECT_EQ(week_of(Instant{8 * 86400}, LeapWeekPolicy::Letter, table).index, 1);
}

TEST(WeekOf, PositiveLeapLengthensWeek) {
    const LeapTable table{{0, +1}};
    EXPECT_EQ(week_of(Instant{7 * 86400}, LeapWeekPolicy::Letter, table).index, 0);
    EXPECT_EQ(week_of(Instant{7 * 86400 + 1}, LeapWeekPolicy::Letter, table).index, 1);
}

TEST(WeekOf, MonotoneUnderSpirit) {
    const LeapTable table{{0, -1}, {2, 1}, {3, -1}, {5, 1}};
    WeekCalendar cal(LeapWeekPolicy::Spirit, table);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = static_cast<std::int64_t>(rng() % (8 * kSecondsPerWeek)) - kSecondsPerWeek;
        std::int64_t b = a + static_cast<std::int64_t>(rng() % 200000);
        EXPECT_LE(cal.week_of(Instant{a}), cal.week_of(Instant{b}));
    }
    for (std::int64_t k = -1; k < 7; ++k) {
        EXPECT_EQ(cal.week_of(cal.week_start(k)).index, k);
        EXPECT_EQ(cal.week_of(cal.week_end(k) - 1).index, k);
    }
}

TEST(ShiftGrid, ZeroIsIdentity) {
    auto t = runs({{D, 100}, {R, 50}});
    EXPECT_EQ(shift_grid(t, 0), t);
}

TEST(ShiftGrid, FullMinuteKeepsLabels) {
    auto t = runs({{D, 90}, {R, 100}, {D, 45}, {W, 125}}, 0);
    auto a = label_rule52(t, TimeGrid{});
    auto b = label_rule52(shift_grid(t, 60), TimeGrid{});
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_EQ(b.start_minute, a.start_minute + 1);
}

TEST(TimeGrid, OffsetIsReducedModuloMinute) {
    EXPECT_EQ(TimeGrid::with_offset(87).minute_offset_seconds, 27);
    EXPECT_EQ(TimeGrid::with_offset(-33).minute_offset_seconds, 27);
}
