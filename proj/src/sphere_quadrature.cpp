#include "ontolab/sphere_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ontolab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

struct GlTable {
    std::vector<double> x;
    std::vector<double> w;
};

// Per-call cache: arc orders vary ring by ring.
const GlTable& gl_cached(int n, std::map<int, GlTable>& cache) {
    auto it = cache.find(n);
    if (it == cache.end()) {
        GlTable t;
        gauss_legendre(n, t.x, t.w);
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

using Arc = std::pair<double, double>; // [start, end], within [0, 2pi)

// Intersect the running arc list with the clip arc [a, a+width).
std::vector<Arc> intersect_arcs(const std::vector<Arc>& arcs, double a, double width) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    const double b = a + width;
    std::vector<Arc> clip_segs;
    if (b <= kTwoPi) {
        clip_segs.push_back({a, b});
    } else {
        clip_segs.push_back({a, kTwoPi});
        clip_segs.push_back({0.0, b - kTwoPi});
    }
    std::vector<Arc> out;
    for (const auto& [s, e] : arcs) {
        for (const auto& [cs, ce] : clip_segs) {
            const double lo = std::max(s, cs);
            const double hi = std::min(e, ce);
            if (hi - lo > 1e-15) out.push_back({lo, hi});
        }
    }
    return out;
}

} // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

void orthonormal_frame(const Eigen::Vector3d& axis, Eigen::Vector3d& e1,
                       Eigen::Vector3d& e2, Eigen::Vector3d& n) {
    n = axis.normalized();
    const Eigen::Vector3d h =
        (std::abs(n.x()) < 0.9) ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    e1 = (h - h.dot(n) * n).normalized();
    e2 = n.cross(e1);
}

namespace {

// Azimuthal contribution of the ring at height mu.
double ring_integral(const std::function<double(const Eigen::Vector3d&)>& f, double mu,
                     const std::vector<Eigen::Vector3d>& clips, const Eigen::Vector3d& e1,
                     const Eigen::Vector3d& e2, const Eigen::Vector3d& n, int m_azimuth,
                     std::map<int, GlTable>& cache) {
    const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    auto point = [&](double phi) {
        return Eigen::Vector3d(s * std::cos(phi) * e1 + s * std::sin(phi) * e2 + mu * n);
    };

    std::vector<Arc> arcs{{0.0, kTwoPi}};
    bool restricted = false;
    for (const auto& a : clips) {
        const double ca = a.dot(n);
        const double a1 = a.dot(e1);
        const double a2 = a.dot(e2);
        const double ra = std::hypot(a1, a2);
        if (s * ra < 1e-14) {
            // clip circle parallel to the ring: all-or-nothing
            if (mu * ca > 0.0) continue;
            return 0.0;
        }
        const double t = -mu * ca / (s * ra);
        if (t <= -1.0) continue; // ring entirely admissible for this clip
        if (t >= 1.0) return 0.0;
        const double w = std::acos(t);
        const double alpha = std::atan2(a2, a1);
        arcs = intersect_arcs(arcs, alpha - w, 2.0 * w);
        restricted = true;
        if (arcs.empty()) return 0.0;
    }

    if (!restricted) {
        // smooth periodic integrand: equispaced sum is spectrally accurate
        const double h = kTwoPi / m_azimuth;
        double acc = 0.0;
        for (int j = 0; j < m_azimuth; ++j) acc += f(point(j * h));
        return acc * h;
    }

    double acc = 0.0;
    for (const auto& [a, b] : arcs) {
        const double len = b - a;
        const int k = std::max(16, static_cast<int>(std::ceil(m_azimuth * len / kTwoPi)));
        const GlTable& t = gl_cached(k, cache);
        for (int j = 0; j < k; ++j) {
            const double phi = a + (t.x[j] + 1.0) * 0.5 * len;
            acc += t.w[j] * 0.5 * len * f(point(phi));
        }
    }
    return acc;
}

} // namespace

double integrate_clipped(const std::function<double(const Eigen::Vector3d&)>& f,
                         const std::vector<Eigen::Vector3d>& clips, const SphereRule& rule) {
    Eigen::Vector3d e1, e2, n;
    orthonormal_frame(clips.empty() ? Eigen::Vector3d::UnitZ() : clips.front(), e1, e2, n);

    // polar breakpoints: tangency heights of each clip circle
    std::vector<double> bps{-1.0, 1.0};
    for (const auto& a : clips) {
        const double ca = a.normalized().dot(n);
        const double sa = std::sqrt(std::max(0.0, 1.0 - ca * ca));
        for (double s : {-sa, sa}) {
            if (s > -1.0 + 1e-14 && s < 1.0 - 1e-14) bps.push_back(s);
        }
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-14; }),
              bps.end());

    std::map<int, GlTable> cache;
    const GlTable& gp = gl_cached(rule.polar_order, cache);

    double total = 0.0;
    for (std::size_t piece = 0; piece + 1 < bps.size(); ++piece) {
        const double p = bps[piece];
        const double q = bps[piece + 1];
        if (q - p < 1e-14) continue;
        // mu = p + (q-p) sin^2(pi t / 2): quadratic flattening at both ends
        // turns the tangency square-root kinks into analytic integrands.
        for (int i = 0; i < rule.polar_order; ++i) {
            const double t = 0.5 * (gp.x[i] + 1.0);
            const double wt = 0.5 * gp.w[i];
            const double sn = std::sin(M_PI * t / 2.0);
            const double mu = p + (q - p) * sn * sn;
            const double dmu = (q - p) * (M_PI / 2.0) * std::sin(M_PI * t);
            const double w = wt * dmu;
            if (w == 0.0) continue;
            total += w * ring_integral(f, mu, clips, e1, e2, n, rule.azimuth_order, cache);
        }
    }
    return total;
}

double integrate_sphere(const std::function<double(const Eigen::Vector3d&)>& f,
                        const SphereRule& rule) {
    return integrate_clipped(f, {}, rule);
}

QuadratureResult integrate_clipped_with_residual(
    const std::function<double(const Eigen::Vector3d&)>& f,
    const std::vector<Eigen::Vector3d>& clips, const SphereRule& rule) {
    const double coarse = integrate_clipped(f, clips, rule);
    const double fine =
        integrate_clipped(f, clips, {2 * rule.polar_order, 2 * rule.azimuth_order});
    return {fine, std::abs(fine - coarse)};
}

} // namespace ontolab
