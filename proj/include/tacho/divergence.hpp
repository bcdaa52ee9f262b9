#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "tacho/engine.hpp"

namespace tacho {

inline const std::vector<std::string>& checked_articles() {
    static const std::vector<std::string> a{"6.1", "7", "8.2", "8.6"};
    return a;
}

/// A violation window reported by some profiles but not all.
struct Disagreement {
    std::string article;
    Instant start;
    Instant end;
    std::vector<std::string> reported_by;
    std::vector<std::string> not_reported_by;
};

struct DivergenceReport {
    std::vector<std::string> profile_ids;                              // sorted
    std::map<std::string, std::map<std::string, std::size_t>> counts;  // article -> profile -> violations
    std::vector<Disagreement> disagreements;

    [[nodiscard]] bool empty() const { return disagreements.empty(); }
    [[nodiscard]] bool article_diverges(const std::string& article) const {
        return std::any_of(disagreements.begin(), disagreements.end(),
                           [&](const Disagreement& d) { return d.article == article; });
    }
};

/// Checks the trace under each profile and lists every window on which they disagree.
/// Profiles are processed in id order, so the result does not depend on argument order.
inline DivergenceReport diff_verdicts(const SecondTrace& trace, std::vector<InterpretationProfile> profiles,
                                      const LeapTable& leaps = {}) {
    if (profiles.size() < 2) throw std::invalid_argument("diff_verdicts needs at least two profiles");
    std::sort(profiles.begin(), profiles.end(),
              [](const InterpretationProfile& a, const InterpretationProfile& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < profiles.size(); ++i)
        if (profiles[i].id == profiles[i - 1].id) throw std::invalid_argument("duplicate profile id " + profiles[i].id);

    using Key = std::tuple<std::string, std::int64_t, std::int64_t>;
    std::map<Key, std::set<std::string>> seen;
    DivergenceReport out;
    for (const auto& p : profiles) {
        out.profile_ids.push_back(p.id);
        for (const auto& a : checked_articles()) out.counts[a][p.id] = 0;
        const auto report = check_all(trace, p, leaps);
        for (const auto& v : report.violations) {
            ++out.counts[v.article][p.id];
            seen[{v.article, v.start.seconds, v.end.seconds}].insert(p.id);
        }
    }
    for (const auto& [key, who] : seen) {
        if (who.size() == profiles.size()) continue;
        Disagreement d;
        d.article = std::get<0>(key);
        d.start = Instant{std::get<1>(key)};
        d.end = Instant{std::get<2>(key)};
        for (const auto& id : out.profile_ids) (who.count(id) ? d.reported_by : d.not_reported_by).push_back(id);
        out.disagreements.push_back(std::move(d));
    }
    std::stable_sort(out.disagreements.begin(), out.disagreements.end(), [](const Disagreement& a, const Disagreement& b) {
        return std::tie(a.start, a.article) < std::tie(b.start, b.article);
    });
    return out;
}

inline nlohmann::ordered_json to_json(const DivergenceReport& d) {
    nlohmann::ordered_json j;
    j["profiles"] = d.profile_ids;
    nlohmann::ordered_json matrix;
    for (const auto& a : checked_articles()) {
        nlohmann::ordered_json row;
        for (const auto& id : d.profile_ids) row[id] = d.counts.at(a).at(id);
        matrix[a] = row;
    }
    j["violation_counts"] = matrix;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : d.disagreements) {
        nlohmann::ordered_json e;
        e["article"] = x.article;
        e["start"] = x.start.seconds;
        e["end"] = x.end.seconds;
        e["reported_by"] = x.reported_by;
        e["not_reported_by"] = x.not_reported_by;
        arr.push_back(e);
    }
    j["disagreements"] = arr;
    j["divergent"] = !d.empty();
    return j;
}

}  // namespace tacho
