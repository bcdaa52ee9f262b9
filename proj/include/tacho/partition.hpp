#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tacho {

using BigInt = boost::multiprecision::cpp_int;

/// Item values in euro cents.
struct Patrimony {
    std::vector<std::int64_t> values;
};

/// `side[i] == false` puts item i with the first partner, `true` with the second.
struct Split {
    std::vector<bool> side;
    std::int64_t difference = 0;

    friend bool operator==(const Split&, const Split&) = default;
};

/// Number of ways to hand n items to two partners: 2^n.
inline BigInt count_distributions(std::uint64_t n) {
    BigInt one = 1;
    return one << n;
}

inline constexpr std::size_t kBruteForceLimit = 24;
inline constexpr std::size_t kMeetInTheMiddleLimit = 44;

namespace detail {

inline void validate(const Patrimony& p) {
    if (p.values.empty()) throw std::invalid_argument("patrimony must contain at least one item");
    for (auto v : p.values)
        if (v < 0) throw std::invalid_argument("item values must be non-negative");
}

inline std::int64_t signed_total(const Patrimony& p, const std::vector<bool>& side) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < side.size(); ++i) d += side[i] ? -p.values[i] : p.values[i];
    return d;
}

/// All signed sums of `v`, sorted.
inline std::vector<std::int64_t> signed_sums(const std::int64_t* v, std::size_t n) {
    std::vector<std::int64_t> sums{0};
    sums.reserve(std::size_t{1} << n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = sums.size();
        for (std::size_t j = 0; j < k; ++j) {
            sums.push_back(sums[j] - v[i]);
            sums[j] += v[i];
        }
    }
    std::sort(sums.begin(), sums.end());
    return sums;
}

/// min over sign choices of |offset + sum(+/- v[i])|, by splitting the items in two halves.
inline std::int64_t min_abs_completion(std::int64_t offset, const std::int64_t* v, std::size_t n) {
    const std::size_t h = n / 2;
    const auto left = signed_sums(v, h);
    const auto right = signed_sums(v + h, n - h);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (auto l : left) {
        const std::int64_t target = -(offset + l);
        auto it = std::lower_bound(right.begin(), right.end(), target);
        if (it != right.end()) best = std::min(best, std::abs(offset + l + *it));
        if (it != right.begin()) best = std::min(best, std::abs(offset + l + *std::prev(it)));
        if (best == 0) break;
    }
    return best;
}

}  // namespace detail

/// Minimum-difference split by meet in the middle.
///
/// Among optimal splits the lexicographically smallest side vector is returned, which always
/// puts item 0 with the first partner. Reconstruction fixes items one at a time, keeping the
/// first partner whenever the optimum is still reachable.
inline Split optimal_split(const Patrimony& p) {
    detail::validate(p);
    const auto n = p.values.size();
    if (n > kMeetInTheMiddleLimit) throw std::invalid_argument("optimal_split: too many items for an exact split");

    const std::int64_t* v = p.values.data();
    const std::int64_t best = detail::min_abs_completion(0, v, n);

    Split s;
    s.side.assign(n, false);
    s.difference = best;
    std::int64_t offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t keep = offset + v[i];
        const bool ok = i + 1 == n ? std::abs(keep) == best : detail::min_abs_completion(keep, v + i + 1, n - i - 1) == best;
        if (ok) {
            offset = keep;
        } else {
            s.side[i] = true;
            offset -= v[i];
        }
    }
    return s;
}

/// Exhaustive search over all 2^n splits, with the same tie rule as `optimal_split`.
inline Split brute_force_split(const Patrimony& p) {
    detail::validate(p);
    const auto n = p.values.size();
    if (n > kBruteForceLimit) throw std::invalid_argument("brute_force_split: more than 24 items");

    Split best;
    best.difference = std::numeric_limits<std::int64_t>::max();
    std::vector<bool> side(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        // bit (n-1-i) is item i, so increasing masks enumerate side vectors lexicographically
        for (std::size_t i = 0; i < n; ++i) side[i] = (mask >> (n - 1 - i)) & 1u;
        const auto d = std::abs(detail::signed_total(p, side));
        if (d < best.difference) {
            best.difference = d;
            best.side = side;
        }
    }
    return best;
}

inline std::int64_t side_total(const Patrimony& p, const Split& s, bool second) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < s.side.size(); ++i)
        if (s.side[i] == second) t += p.values[i];
    return t;
}

}  // namespace tacho
