#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "profile.hpp"

namespace symmext {

// Occupancy mask over a uniform grid; membership is decided at cell centers.
class GridSet {
  public:
    GridSet() = default;

    GridSet(Vec2 origin, double cell, int width, int height)
        : origin_(origin), cell_(cell), w_(width), h_(height), bits_(static_cast<std::size_t>(width) * height, 0) {
        if (!(cell > 0.0)) throw std::invalid_argument("GridSet: cell must be positive");
        if (width < 0 || height < 0) throw std::invalid_argument("GridSet: negative dimensions");
    }

    // Grid centered on the axes: cells [-n/2, n/2) in both directions, so the
    // coordinate axes are cell edges and reflections are exact cell maps.
    static GridSet centered(double cell, int half_cols, int half_rows) {
        return GridSet({-half_cols * cell, -half_rows * cell}, cell, 2 * half_cols, 2 * half_rows);
    }

    template <class F>
    static GridSet rasterize(F&& contains, const BBox& box, double cell) {
        const int hc = static_cast<int>(std::ceil(std::max(std::abs(box.x0), std::abs(box.x1)) / cell)) + 1;
        const int hr = static_cast<int>(std::ceil(std::max(std::abs(box.y0), std::abs(box.y1)) / cell)) + 1;
        GridSet g = centered(cell, hc, hr);
        for (int r = 0; r < g.h_; ++r)
            for (int c = 0; c < g.w_; ++c)
                if (contains(g.center(c, r))) g.set(c, r, true);
        return g;
    }

    Vec2 origin() const { return origin_; }
    double cell() const { return cell_; }
    int width() const { return w_; }
    int height() const { return h_; }

    bool get(int c, int r) const { return bits_[static_cast<std::size_t>(r) * w_ + c] != 0; }
    void set(int c, int r, bool v) { bits_[static_cast<std::size_t>(r) * w_ + c] = v ? 1 : 0; }

    Vec2 center(int c, int r) const { return {origin_.x + (c + 0.5) * cell_, origin_.y + (r + 0.5) * cell_}; }

    bool contains(const Vec2& p) const {
        const int c = static_cast<int>(std::floor((p.x - origin_.x) / cell_));
        const int r = static_cast<int>(std::floor((p.y - origin_.y) / cell_));
        if (c < 0 || c >= w_ || r < 0 || r >= h_) return false;
        return get(c, r);
    }

    std::int64_t cell_count() const {
        std::int64_t n = 0;
        for (auto b : bits_) n += b;
        return n;
    }

    double area() const { return static_cast<double>(cell_count()) * cell_ * cell_; }

    BBox bbox() const {
        return {origin_.x, origin_.x + w_ * cell_, origin_.y, origin_.y + h_ * cell_};
    }

    int column_count(int c) const {
        int n = 0;
        for (int r = 0; r < h_; ++r) n += get(c, r) ? 1 : 0;
        return n;
    }

    int row_count(int r) const {
        int n = 0;
        for (int c = 0; c < w_; ++c) n += get(c, r) ? 1 : 0;
        return n;
    }

  private:
    Vec2 origin_{0, 0};
    double cell_ = 1.0;
    int w_ = 0, h_ = 0;
    std::vector<std::uint8_t> bits_;
};

namespace detail {

// Nested centered runs about the edge index m: run(c) holds run(c-1), which
// makes the symmetrizations idempotent cellwise. Rows [m - c/2, m - c/2 + c).
inline int run_low(int m, int count) { return m - count / 2; }

}  // namespace detail

// Vertical Steiner symmetrization: every column keeps its cell count, placed
// as a centered run about the line y = 0. Exact area preservation.
inline GridSet steiner_sharp(const GridSet& s) {
    const int w = s.width();
    std::vector<int> counts(w);
    int cmax = 0;
    for (int c = 0; c < w; ++c) {
        counts[c] = s.column_count(c);
        cmax = std::max(cmax, counts[c]);
    }
    const int half_rows = cmax / 2 + 2;
    GridSet out({s.origin().x, -half_rows * s.cell()}, s.cell(), w, 2 * half_rows);
    for (int c = 0; c < w; ++c) {
        const int lo = detail::run_low(half_rows, counts[c]);
        for (int r = lo; r < lo + counts[c]; ++r) out.set(c, r, true);
    }
    return out;
}

// Horizontal Steiner symmetrization: rows become centered runs about x = 0.
inline GridSet steiner_flat(const GridSet& s) {
    const int h = s.height();
    std::vector<int> counts(h);
    int cmax = 0;
    for (int r = 0; r < h; ++r) {
        counts[r] = s.row_count(r);
        cmax = std::max(cmax, counts[r]);
    }
    const int half_cols = cmax / 2 + 2;
    GridSet out({-half_cols * s.cell(), s.origin().y}, s.cell(), 2 * half_cols, h);
    for (int r = 0; r < h; ++r) {
        const int lo = detail::run_low(half_cols, counts[r]);
        for (int c = lo; c < lo + counts[r]; ++c) out.set(c, r, true);
    }
    return out;
}

inline GridSet steiner_dagger(const GridSet& s) { return steiner_flat(steiner_sharp(s)); }

// Vertical-only symmetrization (the double-dagger of the perturbation study).
inline GridSet steiner_ddagger(const GridSet& s) { return steiner_sharp(s); }

// Convert the dagger image of a grid set into the profile representation.
// Column pairs mirrored in x are averaged, so the area is preserved exactly
// and the half-cell placement bias of odd runs cancels.
inline SymmetricSet to_symmetric(const GridSet& g) {
    const double cell = g.cell();
    // locate the column index of x = 0 (dagger output grids have it centered)
    const double cx = -g.origin().x / cell;
    const int mid = static_cast<int>(std::llround(cx));
    if (std::abs(cx - mid) > 1e-9)
        throw std::invalid_argument("to_symmetric: grid is not edge-centered on x = 0");
    const int len = std::max(mid, g.width() - mid);
    std::vector<double> samples(static_cast<std::size_t>(len), 0.0);
    for (int k = 0; k < len; ++k) {
        const int right = mid + k;
        const int left = mid - 1 - k;
        const int cr = (right >= 0 && right < g.width()) ? g.column_count(right) : 0;
        const int cl = (left >= 0 && left < g.width()) ? g.column_count(left) : 0;
        samples[k] = (cr + cl) * cell / 4.0;
    }
    for (std::size_t k = 1; k < samples.size(); ++k) samples[k] = std::min(samples[k], samples[k - 1]);
    return SymmetricSet(Profile(std::move(samples), cell));
}

// Convert the ddagger image into the vertical-profile representation; the
// x-marginal is untouched so the support may be anywhere.
inline SharpSet to_sharp(const GridSet& g) {
    int c0 = g.width(), c1 = -1;
    for (int c = 0; c < g.width(); ++c)
        if (g.column_count(c) > 0) {
            c0 = std::min(c0, c);
            c1 = std::max(c1, c);
        }
    if (c1 < c0) return SharpSet(0.0, g.cell(), {});
    std::vector<double> halves;
    halves.reserve(c1 - c0 + 1);
    for (int c = c0; c <= c1; ++c) halves.push_back(g.column_count(c) * g.cell() / 2.0);
    return SharpSet(g.origin().x + c0 * g.cell(), g.cell(), std::move(halves));
}

inline GridSet rasterize(const SymmetricSet& s, double cell) {
    return GridSet::rasterize([&](const Vec2& p) { return s.contains(p); }, s.bbox(), cell);
}

}  // namespace symmext
