#include "clfi/regions.hpp"

#include <algorithm>

namespace clfi {

bool coeff_contains(const CoEffFamily& fam, StateSet x) {
    return std::any_of(fam.maximal.begin(), fam.maximal.end(), [&](StateSet m) { return x.subset_of(m); });
}

CoEffFamily co_effectivity(const EffFamily& fam, unsigned num_states) {
    std::vector<StateSet> comps;
    comps.reserve(fam.minimal().size());
    for (StateSet x : fam.minimal()) comps.push_back(x.complement(num_states));
    return CoEffFamily{maximal_members(comps)};
}

std::size_t RegionReport::count(PowerCategory c) const { return std::count(labels.begin(), labels.end(), c); }

std::vector<StateSet> RegionReport::members(PowerCategory c) const {
    std::vector<StateSet> out;
    for (std::size_t xb = 0; xb < labels.size(); ++xb)
        if (labels[xb] == c) out.emplace_back(static_cast<StateSet::word_type>(xb));
    return out;
}

std::vector<StateSet> minimal_members(const std::vector<StateSet>& family) { return minimize_antichain(family); }

std::vector<StateSet> maximal_members(const std::vector<StateSet>& family) {
    std::vector<StateSet> sorted = family;
    std::sort(sorted.begin(), sorted.end(), [](StateSet a, StateSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<StateSet> kept;
    for (StateSet s : sorted)
        if (std::none_of(kept.begin(), kept.end(), [&](StateSet k) { return s.subset_of(k); })) kept.push_back(s);
    std::sort(kept.begin(), kept.end());
    return kept;
}

namespace {

bool monotone_along_covers(const std::vector<PowerCategory>& labels, unsigned n) {
    for (std::size_t xb = 0; xb < labels.size(); ++xb)
        for (unsigned u = 0; u < n; ++u) {
            std::size_t yb = xb | (std::size_t(1) << u);
            if (yb != xb && !leq_t(labels[xb], labels[yb])) return false;
        }
    return true;
}

bool region_convex(const std::vector<PowerCategory>& labels, unsigned n, PowerCategory c) {
    const std::size_t size = labels.size();
    std::vector<char> up(size), down(size);
    for (std::size_t xb = 0; xb < size; ++xb) up[xb] = down[xb] = labels[xb] == c;
    for (unsigned u = 0; u < n; ++u) {
        const std::size_t bit = std::size_t(1) << u;
        for (std::size_t xb = 0; xb < size; ++xb) {
            if (xb & bit)
                up[xb] = up[xb] || up[xb ^ bit];
            else
                down[xb] = down[xb] || down[xb | bit];
        }
    }
    for (std::size_t xb = 0; xb < size; ++xb)
        if (up[xb] && down[xb] && labels[xb] != c) return false;
    return true;
}

}  // namespace

RegionReport power_regions(const CoalitionModel& m, State w, AgentSet c, const Limits& limits) {
    limits.require_states(m.num_states(), "power-region sweep");
    RegionReport r;
    r.state = w;
    r.coalition = c;
    r.num_states = m.num_states();
    r.labels.resize(subset_count(r.num_states));
    for (std::size_t xb = 0; xb < r.labels.size(); ++xb)
        r.labels[xb] = classify_set(m, w, c, StateSet(static_cast<StateSet::word_type>(xb)));
    r.upward_closed = r.downward_closed = true;
    for (std::size_t xb = 0; xb < r.labels.size(); ++xb)
        for (unsigned u = 0; u < r.num_states; ++u) {
            std::size_t yb = xb | (std::size_t(1) << u);
            if (yb == xb) continue;
            auto vx = StrategicValue::of(r.labels[xb]);
            auto vy = StrategicValue::of(r.labels[yb]);
            if (vx.a && !vy.a) r.upward_closed = false;
            if (vy.b && !vx.b) r.downward_closed = false;
        }
    ConvexityVerdict v = verify_convexity(r);
    r.monotone_certificate = v.monotone_certificate;
    r.convex = v.convex;
    return r;
}

bool verify_closure(const RegionReport& report) {
    for (std::size_t xb = 0; xb < report.labels.size(); ++xb)
        for (unsigned u = 0; u < report.num_states; ++u) {
            std::size_t yb = xb | (std::size_t(1) << u);
            if (yb == xb) continue;
            auto vx = StrategicValue::of(report.labels[xb]);
            auto vy = StrategicValue::of(report.labels[yb]);
            if ((vx.a && !vy.a) || (vy.b && !vx.b)) return false;
        }
    return true;
}

ConvexityVerdict verify_convexity(const RegionReport& report) {
    ConvexityVerdict v;
    v.monotone_certificate = monotone_along_covers(report.labels, report.num_states);
    for (PowerCategory c : kCategories)
        v.convex[static_cast<unsigned>(c)] =
            v.monotone_certificate || region_convex(report.labels, report.num_states, c);
    return v;
}

std::array<bool, 4> convexity_by_chains(const std::vector<PowerCategory>& labels, unsigned n) {
    std::array<bool, 4> convex{true, true, true, true};
    const unsigned size = 1u << n;
    for (unsigned z = 0; z < size; ++z)
        for (unsigned y = z;; y = (y - 1) & z) {
            for (unsigned x = y;; x = (x - 1) & y) {
                if (labels[x] == labels[z] && labels[y] != labels[x]) convex[static_cast<unsigned>(labels[x])] = false;
                if (x == 0) break;
            }
            if (y == 0) break;
        }
    return convex;
}

}  // namespace clfi
