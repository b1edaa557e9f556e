#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace symmext {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Row-major 2x2 matrix, just enough linear algebra for the 2-D changes of
// variables used throughout.
struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;  // [[a b],[c d]]

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 from_rows(const Vec2& r0, const Vec2& r1) { return {r0.x, r0.y, r1.x, r1.y}; }
    static Mat2 from_cols(const Vec2& c0, const Vec2& c1) { return {c0.x, c1.x, c0.y, c1.y}; }

    double det() const { return a * d - b * c; }

    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    Mat2 inverse() const {
        const double dt = det();
        if (dt == 0.0) throw std::invalid_argument("Mat2::inverse: singular matrix");
        const double s = 1.0 / dt;
        return {d * s, -b * s, -c * s, a * s};
    }

    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

struct BBox {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool empty() const { return x1 <= x0 || y1 <= y0; }
    bool contains(const Vec2& p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }

    BBox expanded(double pad) const { return {x0 - pad, x1 + pad, y0 - pad, y1 + pad}; }

    static BBox hull(const BBox& u, const BBox& v) {
        return {std::min(u.x0, v.x0), std::max(u.x1, v.x1), std::min(u.y0, v.y0), std::max(u.y1, v.y1)};
    }
};

// Counter-based deterministic generator. Streams are reproducible across
// platforms and independent of call interleaving, which keeps parallel and
// serial runs bit-identical.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    // Derive an independent stream, e.g. one per Monte-Carlo stratum.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_id) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
        g.next();  // decorrelate nearby ids
        return g;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::uint64_t state_;
};

inline int max_threads() {
    if (const char* env = std::getenv("SYMMEXT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

inline bool nearly_equal(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace symmext
