#include "numero/interval.hpp"

#include <algorithm>
#include <ostream>

#include "numero/errors.hpp"

namespace numero {

namespace {

void sort_unique(std::vector<Rational>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Merge a sorted-by-left list of valid intervals, coalescing overlapping and
// touching neighbours.
std::vector<std::pair<Rational, Rational>> merge_intervals(
    std::vector<std::pair<Rational, Rational>> ivs) {
    std::sort(ivs.begin(), ivs.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& iv : ivs) {
        if (!merged.empty() && iv.first <= merged.back().second) {
            if (iv.second > merged.back().second) merged.back().second = iv.second;
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

} // namespace

IntervalEvent IntervalEvent::interval(const Rational& lo, const Rational& hi) {
    return make({{lo, hi}}, {}, {});
}

IntervalEvent IntervalEvent::points(std::vector<Rational> pts) {
    return make({}, std::move(pts), {});
}

IntervalEvent IntervalEvent::make(std::vector<std::pair<Rational, Rational>> intervals,
                                  std::vector<Rational> plus, std::vector<Rational> minus) {
    for (const auto& [lo, hi] : intervals) {
        if (lo >= hi) throw ValidationError("interval requires a < b");
    }
    IntervalEvent e;
    e.intervals_ = merge_intervals(std::move(intervals));
    sort_unique(plus);
    sort_unique(minus);
    for (const Rational& p : plus) {
        if (std::binary_search(minus.begin(), minus.end(), p)) continue; // minus wins
        if (!e.base_contains(p)) e.plus_.push_back(p);
    }
    for (const Rational& p : minus) {
        if (e.base_contains(p)) e.minus_.push_back(p);
    }
    return e;
}

bool IntervalEvent::base_contains(const Rational& x) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Rational& v, const auto& iv) { return v < iv.first; });
    if (it == intervals_.begin()) return false;
    --it;
    return x >= it->first && x < it->second;
}

bool IntervalEvent::contains(const Rational& x) const {
    if (std::binary_search(plus_.begin(), plus_.end(), x)) return true;
    if (std::binary_search(minus_.begin(), minus_.end(), x)) return false;
    return base_contains(x);
}

Rational IntervalEvent::length() const {
    Rational total(0);
    for (const auto& [lo, hi] : intervals_) total += hi - lo;
    return total;
}

IntervalEvent IntervalEvent::boolean_op(const IntervalEvent& a, const IntervalEvent& b,
                                        bool (*op)(bool, bool)) {
    // Sweep over the elementary segments cut by every endpoint; base
    // membership is constant on each segment.
    std::vector<Rational> cuts;
    for (const auto* src : {&a.intervals_, &b.intervals_}) {
        for (const auto& [lo, hi] : *src) {
            cuts.push_back(lo);
            cuts.push_back(hi);
        }
    }
    sort_unique(cuts);
    std::vector<std::pair<Rational, Rational>> base;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (op(a.base_contains(cuts[i]), b.base_contains(cuts[i]))) {
            base.emplace_back(cuts[i], cuts[i + 1]);
        }
    }

    IntervalEvent result;
    result.intervals_ = merge_intervals(std::move(base));

    std::vector<Rational> candidates;
    for (const auto* src : {&a.plus_, &a.minus_, &b.plus_, &b.minus_}) {
        candidates.insert(candidates.end(), src->begin(), src->end());
    }
    sort_unique(candidates);
    for (const Rational& p : candidates) {
        bool want = op(a.contains(p), b.contains(p));
        bool in_base = result.base_contains(p);
        if (want && !in_base) result.plus_.push_back(p);
        if (!want && in_base) result.minus_.push_back(p);
    }
    return result;
}

IntervalEvent operator|(const IntervalEvent& a, const IntervalEvent& b) {
    return IntervalEvent::boolean_op(a, b, +[](bool x, bool y) { return x || y; });
}

IntervalEvent operator&(const IntervalEvent& a, const IntervalEvent& b) {
    return IntervalEvent::boolean_op(a, b, +[](bool x, bool y) { return x && y; });
}

IntervalEvent operator-(const IntervalEvent& a, const IntervalEvent& b) {
    return IntervalEvent::boolean_op(a, b, +[](bool x, bool y) { return x && !y; });
}

void IntervalEvent::validate() const {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i].first >= intervals_[i].second) throw ValidationError("interval a >= b");
        if (i > 0 && intervals_[i - 1].second >= intervals_[i].first) {
            throw ValidationError("intervals overlap or touch");
        }
    }
    for (const auto* pts : {&plus_, &minus_}) {
        if (!std::is_sorted(pts->begin(), pts->end())) throw ValidationError("points not sorted");
        if (std::adjacent_find(pts->begin(), pts->end()) != pts->end()) {
            throw ValidationError("duplicate points");
        }
    }
    for (const Rational& p : plus_) {
        if (base_contains(p)) throw ValidationError("plus point lies in base");
        if (std::binary_search(minus_.begin(), minus_.end(), p)) {
            throw ValidationError("plus and minus overlap");
        }
    }
    for (const Rational& p : minus_) {
        if (!base_contains(p)) throw ValidationError("minus point outside base");
    }
}

std::ostream& operator<<(std::ostream& os, const IntervalEvent& e) {
    os << "IntervalEvent{";
    for (std::size_t i = 0; i < e.intervals().size(); ++i) {
        if (i) os << " ";
        os << "[" << rational_to_string(e.intervals()[i].first) << ","
           << rational_to_string(e.intervals()[i].second) << ")";
    }
    os << ", +" << e.plus().size() << ", -" << e.minus().size() << "}";
    return os;
}

} // namespace numero
