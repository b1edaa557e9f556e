#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace symmext {

// Nonincreasing step function on [0, N*h): f(x) = samples[floor(x/h)], zero
// beyond. The slice-height description of a bi-axis-symmetric monotone set.
class Profile {
  public:
    Profile() = default;

    Profile(std::vector<double> samples, double cell_width) : samples_(std::move(samples)), h_(cell_width) {
        if (!(h_ > 0.0)) throw std::invalid_argument("Profile: cell_width must be positive");
        double prev = std::numeric_limits<double>::infinity();
        for (double v : samples_) {
            if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("Profile: heights must be finite and >= 0");
            if (v > prev + 1e-12 * (1.0 + prev)) throw std::invalid_argument("Profile: heights must be nonincreasing");
            prev = v;
        }
        trim();
    }

    // Sample a nonincreasing height function at cell centers.
    template <class F>
    static Profile from_function(F&& f, double cell_width, double support_end) {
        std::vector<double> s;
        const int n = static_cast<int>(std::ceil(support_end / cell_width));
        s.reserve(n);
        double prev = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k) {
            double v = std::max(0.0, static_cast<double>(f((k + 0.5) * cell_width)));
            v = std::min(v, prev);  // clamp stray non-monotonicity from rounding
            s.push_back(v);
            prev = v;
        }
        return Profile(std::move(s), cell_width);
    }

    double cell_width() const { return h_; }
    const std::vector<double>& samples() const { return samples_; }
    int size() const { return static_cast<int>(samples_.size()); }
    bool empty() const { return samples_.empty(); }

    double operator()(double x) const {
        if (x < 0.0) x = -x;
        const double kx = x / h_;
        if (kx >= static_cast<double>(samples_.size())) return 0.0;
        return samples_[static_cast<std::size_t>(kx)];
    }

    // End of the support interval [0, support_end).
    double support_end() const { return h_ * static_cast<double>(samples_.size()); }

    double height0() const { return samples_.empty() ? 0.0 : samples_.front(); }

    // Integral of f over [0, support_end).
    double integral() const {
        double acc = 0.0;
        for (double v : samples_) acc += v;
        return acc * h_;
    }

    // Integral of min(f, b) over [0, a]; exact for the step function.
    double clipped_integral(double a, double b) const {
        if (a <= 0.0 || b <= 0.0) return 0.0;
        a = std::min(a, support_end());
        double acc = 0.0;
        const int full = static_cast<int>(a / h_);
        for (int k = 0; k < full && k < size(); ++k) acc += std::min(samples_[k], b) * h_;
        if (full < size()) {
            const double frac = a - full * h_;
            if (frac > 0.0) acc += std::min(samples_[full], b) * frac;
        }
        return acc;
    }

  private:
    void trim() {
        while (!samples_.empty() && samples_.back() == 0.0) samples_.pop_back();
    }

    std::vector<double> samples_;
    double h_ = 1.0;
};

// E = {(x,y): |y| <= f(|x|)} for a nonincreasing profile f. Fixed point of the
// sharp, flat and dagger symmetrizations.
class SymmetricSet {
  public:
    SymmetricSet() = default;
    explicit SymmetricSet(Profile profile) : f_(std::move(profile)) {}

    static SymmetricSet rectangle(double half_width, double half_height, double cell) {
        return SymmetricSet(Profile::from_function([&](double) { return half_height; }, cell, half_width));
    }

    static SymmetricSet disk(double radius, double cell) {
        return SymmetricSet(Profile::from_function(
            [&](double x) { return x >= radius ? 0.0 : std::sqrt(radius * radius - x * x); }, cell, radius));
    }

    static SymmetricSet of_area(double area, double aspect, double cell) {
        const double hw = 0.5 * std::sqrt(area * aspect);
        return rectangle(hw, area / (4.0 * hw), cell);
    }

    const Profile& profile() const { return f_; }

    double area() const { return 4.0 * f_.integral(); }

    bool contains(const Vec2& p) const { return std::abs(p.y) <= f_(p.x); }

    double half_width() const { return f_.support_end(); }
    double half_height() const { return f_.height0(); }

    BBox bbox() const { return {-half_width(), half_width(), -half_height(), half_height()}; }

    bool empty() const { return f_.empty(); }

    // Measure-preserving dilation D_t(x,y) = (tx, y/t). Exact: the profile
    // cells rescale with the set, no resampling involved.
    SymmetricSet dilated(double t) const {
        if (!(t > 0.0)) throw std::invalid_argument("dilated: t must be positive");
        std::vector<double> s = f_.samples();
        for (double& v : s) v /= t;
        return SymmetricSet(Profile(std::move(s), f_.cell_width() * t));
    }

    // Isotropic scaling (cx, cy); multiplies the area by c^2. Exact.
    SymmetricSet scaled(double c) const {
        if (!(c > 0.0)) throw std::invalid_argument("scaled: c must be positive");
        std::vector<double> s = f_.samples();
        for (double& v : s) v *= c;
        return SymmetricSet(Profile(std::move(s), f_.cell_width() * c));
    }

    // Resample onto a new cell width. Area error is at most one boundary
    // layer of cells; prefer dilated()/scaled() which are exact.
    SymmetricSet resampled(double cell) const {
        return SymmetricSet(Profile::from_function([&](double x) { return f_(x); }, cell, half_width() + cell));
    }

    // Side rho of the largest centered square [-rho,rho]^2 inside the set:
    // rho = max_k min((k+1)h, f_k) by monotonicity.
    double inscribed_square_half_side() const {
        double best = 0.0;
        const auto& s = f_.samples();
        for (int k = 0; k < f_.size(); ++k) best = std::max(best, std::min((k + 1) * f_.cell_width(), s[k]));
        return best;
    }

  private:
    Profile f_;
};

// Vertically symmetrized set {(x,y): |y| <= g(x - x0)} with arbitrary
// (not necessarily monotone) nonnegative halfheights; the ddagger image of a
// general set keeps its x-marginal, so the support may be off-center.
class SharpSet {
  public:
    SharpSet() = default;

    SharpSet(double x0, double cell, std::vector<double> halfheights)
        : x0_(x0), h_(cell), g_(std::move(halfheights)) {
        if (!(h_ > 0.0)) throw std::invalid_argument("SharpSet: cell must be positive");
        for (double v : g_)
            if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("SharpSet: halfheights must be finite and >= 0");
    }

    explicit SharpSet(const SymmetricSet& s) {
        const Profile& f = s.profile();
        h_ = f.cell_width();
        x0_ = -f.support_end();
        g_.reserve(2 * f.size());
        for (int k = f.size() - 1; k >= 0; --k) g_.push_back(f.samples()[k]);
        for (int k = 0; k < f.size(); ++k) g_.push_back(f.samples()[k]);
    }

    double x0() const { return x0_; }
    double x1() const { return x0_ + h_ * static_cast<double>(g_.size()); }
    double cell() const { return h_; }
    const std::vector<double>& halfheights() const { return g_; }

    double halfheight(double x) const {
        const double kx = (x - x0_) / h_;
        if (kx < 0.0 || kx >= static_cast<double>(g_.size())) return 0.0;
        return g_[static_cast<std::size_t>(kx)];
    }

    bool contains(const Vec2& p) const { return std::abs(p.y) <= halfheight(p.x); }

    double area() const {
        double acc = 0.0;
        for (double v : g_) acc += v;
        return 2.0 * acc * h_;
    }

    double max_halfheight() const {
        double m = 0.0;
        for (double v : g_) m = std::max(m, v);
        return m;
    }

    BBox bbox() const { return {x0(), x1(), -max_halfheight(), max_halfheight()}; }

  private:
    double x0_ = 0.0;
    double h_ = 1.0;
    std::vector<double> g_;
};

// Symmetric difference |E delta F| of two symmetric sets, exact for the step
// profiles (integrates |f - g| over the merged breakpoints).
inline double symmetric_difference(const SymmetricSet& a, const SymmetricSet& b) {
    const Profile& f = a.profile();
    const Profile& g = b.profile();
    const double end = std::max(f.support_end(), g.support_end());
    if (end == 0.0) return 0.0;
    double acc = 0.0;
    double x = 0.0;
    while (x < end) {
        const double fa = f(x + 1e-15), fb = g(x + 1e-15);
        const double nf = f.cell_width() * (std::floor(x / f.cell_width()) + 1.0);
        const double ng = g.cell_width() * (std::floor(x / g.cell_width()) + 1.0);
        const double nx = std::min({nf, ng, end});
        acc += std::abs(fa - fb) * (nx - x);
        if (!(nx > x)) break;  // fp safety
        x = nx;
    }
    return 4.0 * acc;
}

// Hausdorff distance between the boundaries of two symmetric sets, sampled at
// the finer cell resolution. Used as a convergence diagnostic only.
inline double hausdorff_boundary(const SymmetricSet& a, const SymmetricSet& b) {
    auto boundary = [](const SymmetricSet& s, std::vector<Vec2>& pts) {
        const Profile& f = s.profile();
        for (int k = 0; k < f.size(); ++k) {
            const double x = (k + 0.5) * f.cell_width();
            pts.push_back({x, f.samples()[k]});
        }
        pts.push_back({f.support_end(), 0.0});
        if (f.size() > 0) pts.push_back({0.0, f.samples()[0]});
    };
    std::vector<Vec2> pa, pb;
    boundary(a, pa);
    boundary(b, pb);
    if (pa.empty() || pb.empty()) return std::max(a.half_width(), b.half_width());
    auto one_sided = [](const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
        double worst = 0.0;
        for (const Vec2& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Vec2& q : to) best = std::min(best, (p - q).norm());
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(pa, pb), one_sided(pb, pa));
}

}  // namespace symmext
