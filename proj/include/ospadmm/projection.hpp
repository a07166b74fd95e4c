#pragma once

#include <string>

#include "ospadmm/linalg.hpp"

namespace ospadmm {

/// Closed convex set with an exact Euclidean projection.
struct SimpleSet {
    enum class Kind { Box, Ball, Simplex };

    Kind kind = Kind::Box;
    Vec lo;          // box
    Vec hi;          // box
    Vec center;      // ball
    double radius = 0.0;  // ball
    Eigen::Index n = 0;

    static SimpleSet box(Vec lo, Vec hi);
    static SimpleSet box(Eigen::Index n, double lo, double hi);
    static SimpleSet ball(Vec center, double radius);
    static SimpleSet simplex(Eigen::Index n);

    Eigen::Index dim() const { return n; }
    std::string kind_name() const;
};

/// Euclidean projection: clamp for boxes, radial scaling for balls,
/// sort-and-threshold for the probability simplex.
Vec project(const SimpleSet& set, const Vec& v);

bool contains(const SimpleSet& set, const Vec& v, double tol = 1e-12);

/// dist(v, N_X(z)) for z ∈ X, where N_X is the normal cone.
double normal_cone_distance(const SimpleSet& set, const Vec& z, const Vec& v);

}  // namespace ospadmm
