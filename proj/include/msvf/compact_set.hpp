#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "msvf/errors.hpp"

namespace msvf {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval&) const = default;
};

/// A non-empty compact subset of the reals, stored canonically as a strictly
/// increasing list of pairwise separated closed intervals (points are
/// degenerate intervals). Two CompactSets are equal iff their interval lists
/// are identical, so value equality is set equality.
class CompactSet {
public:
    static constexpr double kMergeEps = 1e-12;

    /// Canonicalize an arbitrary list of intervals: sort, fuse overlapping or
    /// nearly touching ones (gap <= eps), reject NaN/infinite endpoints.
    static CompactSet normalize(std::span<const Interval> raw, double eps = kMergeEps);
    static CompactSet normalize(std::initializer_list<Interval> raw, double eps = kMergeEps);

    static CompactSet point(double p) { return CompactSet::normalize({{p, p}}); }
    static CompactSet interval(double lo, double hi) { return CompactSet::normalize({{lo, hi}}); }
    static CompactSet points(std::span<const double> ps);
    static CompactSet points(std::initializer_list<double> ps);

    const std::vector<Interval>& intervals() const { return ivs_; }
    std::size_t size() const { return ivs_.size(); }

    double min() const { return ivs_.front().lo; }
    double max() const { return ivs_.back().hi; }
    double diameter() const { return max() - min(); }

    /// sup of |x| over the set (the Hausdorff distance to {0}).
    double sup_norm() const;

    bool contains(double x) const;
    bool is_single_interval() const { return ivs_.size() == 1; }
    /// True when every interval is degenerate (a finite point set).
    bool is_finite() const;

    bool operator==(const CompactSet&) const = default;

private:
    explicit CompactSet(std::vector<Interval> canonical) : ivs_(std::move(canonical)) {}
    std::vector<Interval> ivs_;
};

struct NearestResult {
    double points[2];
    int count = 0; // 1, or 2 at an exact gap-midpoint tie
    double distance = 0.0;
};

/// D(a,B): distance from a point to the set.
double dist_point(double a, const CompactSet& b);

/// The full nearest-point set Lambda_B(a); both points are reported at a tie.
NearestResult nearest_points(const CompactSet& b, double a);

/// Exact Hausdorff distance: the farthest-point function D(.,B) is piecewise
/// linear, so the maximum over A is attained at an interval endpoint of A or
/// at a gap midpoint of B lying inside A (and symmetrically).
double hausdorff(const CompactSet& a, const CompactSet& b);

/// {lambda * a : a in A}; lambda = 0 collapses to {0}.
CompactSet scale(double lambda, const CompactSet& a);

/// Elementwise (Minkowski) sum {a + b}.
CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b);

double diameter(const CompactSet& a);

/// Level-k middle-thirds prefractal: 2^k intervals of length 3^-k.
/// Endpoints are i/3^k with a single rounding each, so repeated endpoints
/// coincide bitwise across levels.
CompactSet cantor_prefractal(int k, int max_level = 20);

/// Hausdorff gap between the level-k prefractal and the Cantor set itself.
inline double cantor_prefractal_error_bound(int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p /= 3.0;
    return p;
}

} // namespace msvf
