#include "ospadmm/projection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace ospadmm {

SimpleSet SimpleSet::box(Vec lo, Vec hi) {
    require(lo.size() == hi.size(), "box: bound dimensions differ");
    require_finite(lo, "box lower bound");
    require_finite(hi, "box upper bound");
    require((lo.array() <= hi.array()).all(), "box: empty (lo > hi)");
    SimpleSet s;
    s.kind = Kind::Box;
    s.n = lo.size();
    s.lo = std::move(lo);
    s.hi = std::move(hi);
    return s;
}

SimpleSet SimpleSet::box(Eigen::Index n, double lo, double hi) {
    return box(Vec::Constant(n, lo), Vec::Constant(n, hi));
}

SimpleSet SimpleSet::ball(Vec center, double radius) {
    require_finite(center, "ball center");
    require(std::isfinite(radius) && radius > 0.0, "ball: radius must be positive");
    SimpleSet s;
    s.kind = Kind::Ball;
    s.n = center.size();
    s.center = std::move(center);
    s.radius = radius;
    return s;
}

SimpleSet SimpleSet::simplex(Eigen::Index n) {
    require(n >= 1, "simplex: dimension must be positive");
    SimpleSet s;
    s.kind = Kind::Simplex;
    s.n = n;
    return s;
}

std::string SimpleSet::kind_name() const {
    switch (kind) {
        case Kind::Box: return "box";
        case Kind::Ball: return "ball";
        case Kind::Simplex: return "simplex";
    }
    return "unknown";
}

namespace {

Vec project_simplex(const Vec& v) {
    const auto n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0.0;
    double theta = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        cumsum += u[j];
        const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) theta = t;
    }
    return (v.array() - theta).max(0.0).matrix();
}

}  // namespace

Vec project(const SimpleSet& set, const Vec& v) {
    require(v.size() == set.n, "project: dimension mismatch");
    switch (set.kind) {
        case SimpleSet::Kind::Box:
            return v.cwiseMax(set.lo).cwiseMin(set.hi);
        case SimpleSet::Kind::Ball: {
            const Vec d = v - set.center;
            const double norm = d.norm();
            if (norm <= set.radius) return v;
            return set.center + (set.radius / norm) * d;
        }
        case SimpleSet::Kind::Simplex:
            return project_simplex(v);
    }
    return v;
}

bool contains(const SimpleSet& set, const Vec& v, double tol) {
    if (v.size() != set.n || !v.allFinite()) return false;
    switch (set.kind) {
        case SimpleSet::Kind::Box:
            return ((v - set.lo).array() >= -tol).all() && ((set.hi - v).array() >= -tol).all();
        case SimpleSet::Kind::Ball:
            return (v - set.center).norm() <= set.radius * (1.0 + tol) + tol;
        case SimpleSet::Kind::Simplex:
            return (v.array() >= -tol).all() && std::abs(v.sum() - 1.0) <= tol * std::max<double>(1.0, set.n);
    }
    return false;
}

double normal_cone_distance(const SimpleSet& set, const Vec& z, const Vec& v) {
    require(z.size() == set.n && v.size() == set.n, "normal_cone_distance: dimension mismatch");
    switch (set.kind) {
        case SimpleSet::Kind::Box: {
            double sq = 0.0;
            for (Eigen::Index i = 0; i < set.n; ++i) {
                const bool at_lo = z(i) <= set.lo(i);
                const bool at_hi = z(i) >= set.hi(i);
                double e = v(i);
                if (at_lo && at_hi) e = 0.0;
                else if (at_lo) e = std::max(v(i), 0.0);
                else if (at_hi) e = std::max(-v(i), 0.0);
                sq += e * e;
            }
            return std::sqrt(sq);
        }
        case SimpleSet::Kind::Ball: {
            const Vec d = z - set.center;
            const double norm = d.norm();
            if (norm < set.radius * (1.0 - 1e-12)) return v.norm();
            const Vec u = d / norm;
            const double along = std::max(v.dot(u), 0.0);
            return (v - along * u).norm();
        }
        case SimpleSet::Kind::Simplex: {
            // N(z) = {ν·1 - w : w ≥ 0, w_i = 0 where z_i > 0}; minimize over ν.
            std::vector<double> supp, zero;
            for (Eigen::Index i = 0; i < set.n; ++i) (z(i) > 0.0 ? supp : zero).push_back(v(i));
            std::sort(zero.begin(), zero.end(), std::greater<>());
            const auto phi = [&](double nu) {
                double s = 0.0;
                for (double a : supp) s += (a - nu) * (a - nu);
                for (double a : zero) if (a > nu) s += (a - nu) * (a - nu);
                return s;
            };
            double best = std::numeric_limits<double>::infinity();
            double acc = 0.0;
            for (double a : supp) acc += a;
            for (std::size_t j = 0; j <= zero.size(); ++j) {
                if (j > 0) acc += zero[j - 1];
                const double count = static_cast<double>(supp.size() + j);
                if (count == 0.0) {
                    best = 0.0;
                    continue;
                }
                best = std::min(best, phi(acc / count));
            }
            return std::sqrt(best);
        }
    }
    return 0.0;
}

}  // namespace ospadmm
