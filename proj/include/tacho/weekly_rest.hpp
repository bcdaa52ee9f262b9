#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tacho/minutes.hpp"
#include "tacho/periods.hpp"
#include "tacho/profile.hpp"
#include "tacho/timeline.hpp"

namespace tacho {

/// Weekly-rest bookkeeping over consecutive weeks, with reduced rests and their compensation.
///
/// Every rest run of at least 24 h may be counted as the weekly rest of one of the weeks it
/// touches, or of none, but never of two. A counted rest is regular when its remaining length is
/// at least 45 h and reduced otherwise. Every two consecutive weeks need two counted rests, one
/// of them regular. A reduced rest counted in week w owes 45 h minus its length, paid as one
/// block carved out of a later rest run and finished before week w+3 ends. Carving a block out
/// of a counted weekly rest shortens it, which can turn it into a reduced rest with its own debt;
/// that is how a single week's verdict can depend on weeks arbitrarily far ahead.
///
/// The verdict of week w is decided by exact backtracking over the obligations that week w
/// sets in motion: the pair constraints around w, the debt of its reduced rests, and recursively
/// the pair constraints and debts of every week whose weekly rest was used to pay.
class WeeklyRestSolver {
public:
    struct Compensation {
        std::size_t reduced_run = 0;
        std::size_t host_run = 0;
        std::int64_t minutes = 0;
    };

    struct Witness {
        /// week each rest run is counted in; nullopt when not counted as a weekly rest
        std::vector<std::optional<std::int64_t>> counted_week;
        std::vector<std::int64_t> remaining_minutes;  // run length minus compensation carved out of it
        std::vector<Compensation> compensations;
    };

    class BudgetExceeded : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    WeeklyRestSolver(const MinuteTrace& mt, const WeekCalendar& calendar, const InterpretationProfile& profile,
                     std::int64_t node_budget = 2'000'000)
        : calendar_(calendar), profile_(profile), budget_(node_budget) {
        for (const auto& r : rest_runs(mt)) {
            Run run;
            run.minutes = r.minutes;
            run.start = mt.minute_start(r.first_minute);
            run.end = mt.minute_start(r.first_minute + r.minutes);
            run.candidate = r.minutes >= kReducedWeeklyRest;
            if (run.candidate) {
                run.first_week = calendar_.week_of(run.start).index;
                run.last_week = calendar_.week_of(run.end - 1).index;
            }
            runs_.push_back(run);
        }

        std::int64_t first = calendar_.week_of(mt.start()).index;
        if (calendar_.week_start(first) < mt.start()) ++first;
        std::int64_t last = calendar_.week_of(mt.end() - 1).index;
        if (calendar_.week_end(last) > mt.end()) --last;
        scope_first_ = first;
        scope_last_ = last;
    }

    /// Weeks entirely covered by the trace.
    [[nodiscard]] std::int64_t scope_first() const { return scope_first_; }
    [[nodiscard]] std::int64_t scope_last() const { return scope_last_; }
    [[nodiscard]] bool has_scope() const { return scope_last_ - scope_first_ + 1 >= 2; }

    [[nodiscard]] Instant run_start(std::size_t i) const { return runs_.at(i).start; }
    [[nodiscard]] Instant run_end(std::size_t i) const { return runs_.at(i).end; }
    [[nodiscard]] std::size_t run_count() const { return runs_.size(); }

    /// A reading under which week w and everything it depends on are legal.
    std::optional<Witness> solve_week(std::int64_t w) { return solve(std::set<std::int64_t>{w}); }

    /// A single reading under which every week in scope is legal.
    std::optional<Witness> solve_all() {
        std::set<std::int64_t> seeds;
        for (auto w = scope_first_; w <= scope_last_; ++w) seeds.insert(w);
        return solve(seeds);
    }

    [[nodiscard]] std::int64_t nodes_visited() const { return nodes_; }

private:
    static constexpr std::int64_t kUndecided = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kNotCounted = std::numeric_limits<std::int64_t>::min() + 1;

    struct Run {
        Instant start;
        Instant end;
        std::int64_t minutes = 0;
        bool candidate = false;
        std::int64_t first_week = 0;
        std::int64_t last_week = -1;
    };

    struct State {
        std::vector<std::int64_t> role;
        std::vector<std::int64_t> hosted;
        std::vector<std::ptrdiff_t> host_of;
        std::vector<std::int64_t> owed;
        std::vector<Compensation> comps;
        std::set<std::int64_t> pending;
        std::set<std::int64_t> closure;
    };

    [[nodiscard]] bool in_scope(std::int64_t w) const { return w >= scope_first_ && w <= scope_last_; }

    [[nodiscard]] static bool counted(const State& s, std::size_t i) { return s.role[i] >= kNotCounted + 1; }

    [[nodiscard]] std::int64_t remaining(const State& s, std::size_t i) const {
        return runs_[i].minutes - s.hosted[i];
    }

    [[nodiscard]] std::int64_t reserve(const State& s, std::size_t i) const {
        if (counted(s, i)) return kReducedWeeklyRest;
        if (s.role[i] == kNotCounted && runs_[i].minutes >= profile_.daily_rest_threshold)
            return profile_.daily_rest_threshold;
        return 0;
    }

    [[nodiscard]] bool pair_ok(const State& s, std::int64_t a, std::int64_t b) const {
        int count = 0;
        int regular = 0;
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            if (s.role[i] != a && s.role[i] != b) continue;
            ++count;
            regular += remaining(s, i) >= kRegularWeeklyRest;
        }
        return count >= 2 && regular >= 1;
    }

    [[nodiscard]] std::vector<std::pair<std::int64_t, std::int64_t>> pairs_around(std::int64_t w) const {
        std::vector<std::pair<std::int64_t, std::int64_t>> p;
        if (in_scope(w - 1) && in_scope(w)) p.emplace_back(w - 1, w);
        if (in_scope(w) && in_scope(w + 1)) p.emplace_back(w, w + 1);
        return p;
    }

    void add_host_weeks(State& s, std::size_t h) const {
        const auto& run = runs_[h];
        if (!run.candidate) return;
        for (auto w = run.first_week; w <= run.last_week; ++w)
            if (in_scope(w)) s.pending.insert(w);
        if (counted(s, h) && in_scope(s.role[h])) s.pending.insert(s.role[h]);
    }

    [[nodiscard]] bool validate(const State& s) const {
        for (auto w : s.closure)
            for (auto [a, b] : pairs_around(w))
                if (!pair_ok(s, a, b)) return false;
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            if (s.hosted[i] > runs_[i].minutes - reserve(s, i)) return false;
            if (counted(s, i) && s.closure.count(s.role[i]) && remaining(s, i) < kRegularWeeklyRest) {
                if (s.host_of[i] < 0 || s.owed[i] != kRegularWeeklyRest - remaining(s, i)) return false;
            }
        }
        return true;
    }

    std::optional<State> search(State s) {
        if (++nodes_ > budget_) throw BudgetExceeded("weekly rest search exceeded its node budget");
        if (s.pending.empty()) return validate(s) ? std::optional<State>(std::move(s)) : std::nullopt;

        const std::int64_t w = *s.pending.begin();
        const auto pairs = pairs_around(w);
        std::set<std::int64_t> touched{w};
        for (auto [a, b] : pairs) {
            touched.insert(a);
            touched.insert(b);
        }

        // Decide how each undecided rest touching these weeks is counted.
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            const auto& run = runs_[i];
            if (!run.candidate || s.role[i] != kUndecided) continue;
            bool relevant = false;
            for (auto t : touched) relevant = relevant || (t >= run.first_week && t <= run.last_week);
            if (!relevant) continue;

            for (auto x = run.first_week; x <= run.last_week; ++x) {
                if (remaining(s, i) < kReducedWeeklyRest) break;
                State next = s;
                next.role[i] = x;
                if (next.hosted[i] > 0 && in_scope(x)) next.pending.insert(x);
                if (auto r = search(std::move(next))) return r;
            }
            State next = std::move(s);
            next.role[i] = kNotCounted;
            return search(std::move(next));
        }

        for (auto [a, b] : pairs)
            if (!pair_ok(s, a, b)) return std::nullopt;

        // Pay the debt of the earliest unpaid reduced rest counted in w.
        for (std::size_t r = 0; r < runs_.size(); ++r) {
            if (s.role[r] != w || s.host_of[r] >= 0) continue;
            const auto rem = remaining(s, r);
            if (rem >= kRegularWeeklyRest) continue;
            const std::int64_t owed = kRegularWeeklyRest - rem;
            const Instant deadline = calendar_.week_end(w + 3);

            for (std::size_t h = 0; h < runs_.size(); ++h) {
                if (h == r || runs_[h].start < runs_[r].end) continue;
                if (profile_.attached_compensation && runs_[h].minutes < profile_.daily_rest_threshold) continue;
                if (s.hosted[h] + owed > runs_[h].minutes - reserve(s, h)) continue;
                if (runs_[h].start + (s.hosted[h] + owed) * kSecondsPerMinute > deadline) continue;
                State next = s;
                next.hosted[h] += owed;
                next.host_of[r] = static_cast<std::ptrdiff_t>(h);
                next.owed[r] = owed;
                next.comps.push_back({r, h, owed});
                add_host_weeks(next, h);
                if (auto res = search(std::move(next))) return res;
            }
            return std::nullopt;
        }

        s.pending.erase(w);
        s.closure.insert(w);
        return search(std::move(s));
    }

    std::optional<Witness> solve(const std::set<std::int64_t>& seeds) {
        State s;
        s.role.assign(runs_.size(), kUndecided);
        for (std::size_t i = 0; i < runs_.size(); ++i)
            if (!runs_[i].candidate) s.role[i] = kNotCounted;
        s.hosted.assign(runs_.size(), 0);
        s.host_of.assign(runs_.size(), -1);
        s.owed.assign(runs_.size(), 0);
        s.pending = seeds;

        auto found = search(std::move(s));
        if (!found) return std::nullopt;
        Witness wit;
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            wit.counted_week.push_back(counted(*found, i) ? std::optional<std::int64_t>(found->role[i]) : std::nullopt);
            wit.remaining_minutes.push_back(remaining(*found, i));
        }
        wit.compensations = found->comps;
        return wit;
    }

    WeekCalendar calendar_;
    InterpretationProfile profile_;
    std::vector<Run> runs_;
    std::int64_t scope_first_ = 0;
    std::int64_t scope_last_ = -1;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
};

}  // namespace tacho
