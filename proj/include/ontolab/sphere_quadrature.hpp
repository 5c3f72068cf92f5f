#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace ontolab {

/// Product-rule orders: Gauss-Legendre in the polar coordinate,
/// equispaced azimuth nodes.
struct SphereRule {
    int polar_order = 64;
    int azimuth_order = 128;
};

struct QuadratureResult {
    double value = 0.0;
    double residual = 0.0; // |value - same integral at halved orders|
};

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Right-handed orthonormal frame (e1, e2, n) with n = axis normalized.
void orthonormal_frame(const Eigen::Vector3d& axis, Eigen::Vector3d& e1,
                       Eigen::Vector3d& e2, Eigen::Vector3d& n);

/**
 * Integral of f over { v in S^2 : a.v > 0 for every a in clips },
 * solid-angle measure. f must be smooth inside the clip region (its
 * zero sets / discontinuity circles must all be listed as clips).
 *
 * Polar axis is clips[0] (z if unclipped). The polar interval is split
 * at the clip-circle tangency heights and each piece is integrated with
 * Gauss-Legendre under a sin^2 endpoint substitution, which removes the
 * square-root kinks the tangencies induce. Each ring is either a full
 * circle (equispaced azimuth sum, spectrally accurate for smooth f) or
 * a set of arcs with analytically located endpoints, integrated by
 * per-arc Gauss-Legendre. This keeps the great-circle discontinuities
 * out of the node set entirely.
 */
double integrate_clipped(const std::function<double(const Eigen::Vector3d&)>& f,
                         const std::vector<Eigen::Vector3d>& clips,
                         const SphereRule& rule = {});

/// Full-sphere integral of a smooth integrand.
double integrate_sphere(const std::function<double(const Eigen::Vector3d&)>& f,
                        const SphereRule& rule = {});

/// Runs the clipped integral at the requested orders and at doubled
/// orders; returns the doubled-order value with the difference as the
/// residual estimate.
QuadratureResult integrate_clipped_with_residual(
    const std::function<double(const Eigen::Vector3d&)>& f,
    const std::vector<Eigen::Vector3d>& clips, const SphereRule& rule = {});

} // namespace ontolab
