#include "cech/datagen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cech {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// mt19937_64 with explicit 53-bit mantissa scaling, so streams do not depend
// on the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>((static_cast<unsigned __int128>(gen()) * n) >> 64);
    }
};

struct Grid2 {
    double cell;
    int nx, ny;
    double lo_x, lo_y;
    std::vector<int> slot;  // -1: empty

    Grid2(const Box2& box, double spacing)
        : cell(spacing / std::sqrt(2.0)),
          nx(std::max(1, static_cast<int>(std::ceil((box.hi_x - box.lo_x) / cell)))),
          ny(std::max(1, static_cast<int>(std::ceil((box.hi_y - box.lo_y) / cell)))),
          lo_x(box.lo_x),
          lo_y(box.lo_y),
          slot(static_cast<std::size_t>(nx) * ny, -1) {}

    int cx(double x) const { return std::min(nx - 1, std::max(0, static_cast<int>((x - lo_x) / cell))); }
    int cy(double y) const { return std::min(ny - 1, std::max(0, static_cast<int>((y - lo_y) / cell))); }
    int& at(int x, int y) { return slot[static_cast<std::size_t>(y) * nx + x]; }
};

struct Grid3 {
    double cell;
    int nx, ny, nz;
    double lo_x, lo_y, lo_z;
    std::vector<int> slot;

    Grid3(const Box3& box, double spacing)
        : cell(spacing / std::sqrt(3.0)),
          nx(std::max(1, static_cast<int>(std::ceil((box.hi_x - box.lo_x) / cell)))),
          ny(std::max(1, static_cast<int>(std::ceil((box.hi_y - box.lo_y) / cell)))),
          nz(std::max(1, static_cast<int>(std::ceil((box.hi_z - box.lo_z) / cell)))),
          lo_x(box.lo_x),
          lo_y(box.lo_y),
          lo_z(box.lo_z),
          slot(static_cast<std::size_t>(nx) * ny * nz, -1) {}

    int cx(double x) const { return std::min(nx - 1, std::max(0, static_cast<int>((x - lo_x) / cell))); }
    int cy(double y) const { return std::min(ny - 1, std::max(0, static_cast<int>((y - lo_y) / cell))); }
    int cz(double z) const { return std::min(nz - 1, std::max(0, static_cast<int>((z - lo_z) / cell))); }
    int& at(int x, int y, int z) {
        return slot[(static_cast<std::size_t>(z) * ny + y) * nx + x];
    }
};

void check_spacing(double s) {
    if (!(s > 0)) throw std::invalid_argument("min_spacing must be positive");
}

}  // namespace

std::vector<Point2> poisson_disk_positions(const Box2& extent, double min_spacing,
                                           std::uint64_t seed, int attempts) {
    check_spacing(min_spacing);
    std::vector<Point2> points;
    if (!(extent.hi_x > extent.lo_x) || !(extent.hi_y > extent.lo_y)) return points;

    Rng rng(seed);
    Grid2 grid(extent, min_spacing);
    const double r2 = min_spacing * min_spacing;

    auto far_enough = [&](Point2 q) {
        const int cx = grid.cx(q.x), cy = grid.cy(q.y);
        for (int dy = -2; dy <= 2; ++dy) {
            const int y = cy + dy;
            if (y < 0 || y >= grid.ny) continue;
            for (int dx = -2; dx <= 2; ++dx) {
                const int x = cx + dx;
                if (x < 0 || x >= grid.nx) continue;
                const int idx = grid.at(x, y);
                if (idx >= 0) {
                    const Point2 d = q - points[idx];
                    if (dot(d, d) < r2) return false;
                }
            }
        }
        return true;
    };
    auto place = [&](Point2 q) {
        grid.at(grid.cx(q.x), grid.cy(q.y)) = static_cast<int>(points.size());
        points.push_back(q);
    };

    std::vector<int> active;
    place(Point2{rng.uniform(extent.lo_x, extent.hi_x), rng.uniform(extent.lo_y, extent.hi_y)});
    active.push_back(0);

    while (!active.empty()) {
        const std::size_t pick = rng.index(active.size());
        const Point2 p = points[active[pick]];
        bool found = false;
        for (int a = 0; a < attempts; ++a) {
            const double ang = rng.uniform(0.0, kTwoPi);
            const double rad = rng.uniform(min_spacing, 2.0 * min_spacing);
            const Point2 q = p + rad * Point2{std::cos(ang), std::sin(ang)};
            if (q.x < extent.lo_x || q.x >= extent.hi_x || q.y < extent.lo_y || q.y >= extent.hi_y)
                continue;
            if (!far_enough(q)) continue;
            active.push_back(static_cast<int>(points.size()));
            place(q);
            found = true;
            break;
        }
        if (!found) {
            active[pick] = active.back();
            active.pop_back();
        }
    }
    return points;
}

std::vector<Point3> poisson_disk_positions(const Box3& extent, double min_spacing,
                                           std::uint64_t seed, int attempts) {
    check_spacing(min_spacing);
    std::vector<Point3> points;
    if (!(extent.hi_x > extent.lo_x) || !(extent.hi_y > extent.lo_y) ||
        !(extent.hi_z > extent.lo_z))
        return points;

    Rng rng(seed);
    Grid3 grid(extent, min_spacing);
    const double r2 = min_spacing * min_spacing;

    auto far_enough = [&](Point3 q) {
        const int cx = grid.cx(q.x), cy = grid.cy(q.y), cz = grid.cz(q.z);
        for (int dz = -2; dz <= 2; ++dz) {
            const int z = cz + dz;
            if (z < 0 || z >= grid.nz) continue;
            for (int dy = -2; dy <= 2; ++dy) {
                const int y = cy + dy;
                if (y < 0 || y >= grid.ny) continue;
                for (int dx = -2; dx <= 2; ++dx) {
                    const int x = cx + dx;
                    if (x < 0 || x >= grid.nx) continue;
                    const int idx = grid.at(x, y, z);
                    if (idx >= 0) {
                        const Point3 d = q - points[idx];
                        if (dot(d, d) < r2) return false;
                    }
                }
            }
        }
        return true;
    };
    auto place = [&](Point3 q) {
        grid.at(grid.cx(q.x), grid.cy(q.y), grid.cz(q.z)) = static_cast<int>(points.size());
        points.push_back(q);
    };

    std::vector<int> active;
    place(Point3{rng.uniform(extent.lo_x, extent.hi_x), rng.uniform(extent.lo_y, extent.hi_y),
                 rng.uniform(extent.lo_z, extent.hi_z)});
    active.push_back(0);

    while (!active.empty()) {
        const std::size_t pick = rng.index(active.size());
        const Point3 p = points[active[pick]];
        bool found = false;
        for (int a = 0; a < attempts; ++a) {
            // direction by rejection from the unit cube
            Vec3 dir;
            double n2;
            do {
                dir = Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
                n2 = dot(dir, dir);
            } while (n2 > 1.0 || n2 < 1e-12);
            const double rad = rng.uniform(min_spacing, 2.0 * min_spacing);
            const Point3 q = p + (rad / std::sqrt(n2)) * dir;
            if (q.x < extent.lo_x || q.x >= extent.hi_x || q.y < extent.lo_y ||
                q.y >= extent.hi_y || q.z < extent.lo_z || q.z >= extent.hi_z)
                continue;
            if (!far_enough(q)) continue;
            active.push_back(static_cast<int>(points.size()));
            place(q);
            found = true;
            break;
        }
        if (!found) {
            active[pick] = active.back();
            active.pop_back();
        }
    }
    return points;
}

std::vector<Point2> uniform_positions(const Box2& extent, int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Point2> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(Point2{rng.uniform(extent.lo_x, extent.hi_x),
                             rng.uniform(extent.lo_y, extent.hi_y)});
    return out;
}

std::vector<Point3> uniform_positions(const Box3& extent, int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Point3> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(Point3{rng.uniform(extent.lo_x, extent.hi_x),
                             rng.uniform(extent.lo_y, extent.hi_y),
                             rng.uniform(extent.lo_z, extent.hi_z)});
    return out;
}

std::vector<double> sample_radii(int n, double base_radius, double alpha_lo, double alpha_hi,
                                 std::uint64_t seed) {
    if (!(alpha_lo > 0) || alpha_lo > alpha_hi || !(base_radius > 0))
        throw std::invalid_argument("radius law requires 0 < alpha_lo <= alpha_hi and base_radius > 0");
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(rng.uniform(alpha_lo, alpha_hi) * base_radius);
    return out;
}

std::vector<Disk> make_disks(std::span<const Point2> positions, std::span<const double> radii) {
    if (positions.size() != radii.size())
        throw std::invalid_argument("positions and radii must have equal length");
    std::vector<Disk> out;
    out.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        out.push_back(Disk{static_cast<int>(i), positions[i], radii[i]});
    return out;
}

std::vector<Ball> make_balls(std::span<const Point3> positions, std::span<const double> radii) {
    if (positions.size() != radii.size())
        throw std::invalid_argument("positions and radii must have equal length");
    std::vector<Ball> out;
    out.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        out.push_back(Ball{static_cast<int>(i), positions[i], radii[i]});
    return out;
}

}  // namespace cech
