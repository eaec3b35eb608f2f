#include "msvf/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace msvf {

namespace {

double clean_zero(double x) { return x == 0.0 ? 0.0 : x; }

} // namespace

CompactSet CompactSet::normalize(std::span<const Interval> raw, double eps) {
    if (raw.empty()) throw EmptySetError("normalize: empty input");
    std::vector<Interval> ivs;
    ivs.reserve(raw.size());
    for (const Interval& iv : raw) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw InvalidEndpointError("normalize: non-finite endpoint");
        double lo = clean_zero(std::min(iv.lo, iv.hi));
        double hi = clean_zero(std::max(iv.lo, iv.hi));
        ivs.push_back({lo, hi});
    }
    std::sort(ivs.begin(), ivs.end(), [](const Interval& x, const Interval& y) {
        return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
    });
    std::vector<Interval> out;
    out.push_back(ivs.front());
    for (std::size_t i = 1; i < ivs.size(); ++i) {
        if (ivs[i].lo - out.back().hi <= eps)
            out.back().hi = std::max(out.back().hi, ivs[i].hi);
        else
            out.push_back(ivs[i]);
    }
    return CompactSet(std::move(out));
}

CompactSet CompactSet::normalize(std::initializer_list<Interval> raw, double eps) {
    return normalize(std::span<const Interval>(raw.begin(), raw.size()), eps);
}

CompactSet CompactSet::points(std::span<const double> ps) {
    std::vector<Interval> ivs;
    ivs.reserve(ps.size());
    for (double p : ps) ivs.push_back({p, p});
    return normalize(ivs);
}

CompactSet CompactSet::points(std::initializer_list<double> ps) {
    return points(std::span<const double>(ps.begin(), ps.size()));
}

double CompactSet::sup_norm() const {
    return std::max(std::abs(min()), std::abs(max()));
}

bool CompactSet::contains(double x) const {
    auto it = std::upper_bound(ivs_.begin(), ivs_.end(), x,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    if (it == ivs_.begin()) return false;
    --it;
    return x <= it->hi;
}

bool CompactSet::is_finite() const {
    return std::all_of(ivs_.begin(), ivs_.end(), [](const Interval& iv) { return iv.lo == iv.hi; });
}

double dist_point(double a, const CompactSet& b) {
    const auto& ivs = b.intervals();
    auto it = std::upper_bound(ivs.begin(), ivs.end(), a,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    double best = std::numeric_limits<double>::infinity();
    if (it != ivs.end()) best = std::min(best, it->lo - a);
    if (it != ivs.begin()) {
        const Interval& left = *std::prev(it);
        best = std::min(best, a <= left.hi ? 0.0 : a - left.hi);
    }
    return best;
}

NearestResult nearest_points(const CompactSet& b, double a) {
    NearestResult r;
    r.distance = dist_point(a, b);
    if (r.distance == 0.0) {
        r.points[0] = a;
        r.count = 1;
        return r;
    }
    r.count = 0;
    const auto& ivs = b.intervals();
    auto it = std::upper_bound(ivs.begin(), ivs.end(), a,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    if (it != ivs.begin() && a - std::prev(it)->hi == r.distance)
        r.points[r.count++] = std::prev(it)->hi;
    if (it != ivs.end() && it->lo - a == r.distance)
        r.points[r.count++] = it->lo;
    return r;
}

namespace {

// max over a in A of D(a, B), exactly: D(., B) is piecewise linear with local
// maxima only at gap midpoints of B, so it suffices to test A's endpoints and
// the B-gap midpoints covered by A. Midpoint candidates are evaluated as half
// the gap width, avoiding the rounding of forming the midpoint itself.
double directed_max(const CompactSet& a, const CompactSet& b) {
    double best = 0.0;
    for (const Interval& iv : a.intervals()) {
        best = std::max(best, dist_point(iv.lo, b));
        best = std::max(best, dist_point(iv.hi, b));
    }
    const auto& bi = b.intervals();
    for (std::size_t i = 0; i + 1 < bi.size(); ++i) {
        double u = bi[i].hi, v = bi[i + 1].lo;
        double mid = u + (v - u) / 2;
        for (const Interval& iv : a.intervals()) {
            if (iv.lo <= mid && mid <= iv.hi) {
                best = std::max(best, (v - u) / 2);
                break;
            }
        }
    }
    return best;
}

} // namespace

double hausdorff(const CompactSet& a, const CompactSet& b) {
    return std::max(directed_max(a, b), directed_max(b, a));
}

CompactSet scale(double lambda, const CompactSet& a) {
    if (lambda == 0.0) return CompactSet::point(0.0);
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const Interval& iv : a.intervals()) out.push_back({lambda * iv.lo, lambda * iv.hi});
    return CompactSet::normalize(out);
}

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b) {
    std::vector<Interval> out;
    out.reserve(a.size() * b.size());
    for (const Interval& x : a.intervals())
        for (const Interval& y : b.intervals()) out.push_back({x.lo + y.lo, x.hi + y.hi});
    return CompactSet::normalize(out);
}

double diameter(const CompactSet& a) { return a.diameter(); }

CompactSet cantor_prefractal(int k, int max_level) {
    if (k < 0) throw DomainError("cantor_prefractal: negative level");
    if (k > max_level) throw LevelOverflowError("cantor_prefractal: level above limit");
    std::vector<std::pair<std::int64_t, std::int64_t>> cur{{0, 1}};
    std::int64_t denom = 1;
    for (int i = 0; i < k; ++i) {
        denom *= 3;
        std::vector<std::pair<std::int64_t, std::int64_t>> next;
        next.reserve(cur.size() * 2);
        for (auto [lo, hi] : cur) {
            lo *= 3;
            hi *= 3;
            std::int64_t t = (hi - lo) / 3;
            next.push_back({lo, lo + t});
            next.push_back({hi - t, hi});
        }
        cur = std::move(next);
    }
    std::vector<Interval> out;
    out.reserve(cur.size());
    double d = static_cast<double>(denom);
    for (auto [lo, hi] : cur)
        out.push_back({static_cast<double>(lo) / d, static_cast<double>(hi) / d});
    return CompactSet::normalize(out, 0.0);
}

} // namespace msvf
