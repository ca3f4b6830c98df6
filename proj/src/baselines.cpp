#include "cech/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <vector>

namespace cech {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point t0) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

template <typename Element>
const Element* min_radius_element(std::span<const Element> elems) {
    const Element* best = &elems[0];
    for (const Element& e : elems.subspan(1))
        if (e.radius < best->radius || (e.radius == best->radius && e.id < best->id)) best = &e;
    return best;
}

}  // namespace

std::optional<Point2> verify_reference_2d(std::span<const Disk> disks, Tolerance tol) {
    if (disks.empty()) return std::nullopt;
    if (disks.size() == 1) return disks[0].center;

    const Disk* smallest = min_radius_element(disks);
    bool inside_all = true;
    for (const Disk& d : disks) {
        if (d.id == smallest->id) continue;
        if (!disk_in_disk(*smallest, d, tol)) {
            inside_all = false;
            break;
        }
    }
    if (inside_all) return smallest->center;

    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            const CircleIntersections X = circle_circle_intersections(disks[i], disks[j], tol);
            if (X.identical) continue;
            for (int t = 0; t < X.count; ++t)
                if (point_in_all(X.points[t], disks, tol)) return X.points[t];
        }
    return std::nullopt;
}

std::optional<Point3> verify_reference_3d(std::span<const Ball> balls, Tolerance tol) {
    if (balls.empty()) return std::nullopt;
    if (balls.size() == 1) return balls[0].center;

    // (a) any ball contained in all others
    for (const Ball& a : balls) {
        bool inside_all = true;
        for (const Ball& b : balls) {
            if (b.id == a.id) continue;
            if (!ball_in_ball(a, b, tol)) {
                inside_all = false;
                break;
            }
        }
        if (inside_all) return a.center;
    }

    // (b) every pairwise crease plane, exhaustive 2D scheme inside it
    std::vector<Disk> sections;
    sections.reserve(balls.size() - 1);
    for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t j = i + 1; j < balls.size(); ++j) {
            const SphereIntersection ss = sphere_sphere_intersection(balls[i], balls[j], tol);
            if (ss.identical || !ss.circle) continue;
            const Circle3& crease = *ss.circle;
            sections.clear();
            sections.push_back(Disk{balls[j].id, Point2{0.0, 0.0}, crease.radius});
            bool plane_ok = true;
            for (std::size_t l = 0; l < balls.size(); ++l) {
                if (l == i || l == j) continue;
                const std::optional<Disk> sec = ball_plane_intersection(balls[l], crease.plane, tol);
                if (!sec) {
                    plane_ok = false;
                    break;
                }
                sections.push_back(*sec);
            }
            if (!plane_ok) continue;
            if (const auto w = verify_reference_2d(sections, tol))
                return lift_to_3d(*w, crease.plane);
        }
    return std::nullopt;
}

bool oracle_2d(std::span<const Disk> disks, Tolerance tol) {
    return verify_reference_2d(disks, tol).has_value();
}

bool oracle_3d(std::span<const Ball> balls, Tolerance tol) {
    return verify_reference_3d(balls, tol).has_value();
}

VRComplex vr_complex(const NeighborhoodGraph& g, int max_dimension) {
    const int n = g.vertex_count();
    VRComplex vr;
    SimplexSet l0;
    for (int i = 0; i < n; ++i) l0.insert(Simplex{{i}});
    vr.levels.push_back(std::move(l0));
    if (max_dimension == 0) return vr;

    SimplexSet l1;
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors[i])
            if (j > i) l1.insert(Simplex{{i, j}});
    if (l1.empty()) return vr;
    vr.levels.push_back(std::move(l1));

    int k = 2;
    while (max_dimension == -1 || k <= max_dimension) {
        SimplexSet lk;
        for (const Simplex& s : vr.levels[k - 1]) {
            const std::vector<int> nbrs = common_neighbors(g, s);
            auto it = std::upper_bound(nbrs.begin(), nbrs.end(), s.max_vertex());
            for (; it != nbrs.end(); ++it) lk.insert(with_vertex(s, *it));
        }
        if (lk.empty()) break;
        vr.levels.push_back(std::move(lk));
        ++k;
    }
    return vr;
}

// --- minimum enclosing ball -------------------------------------------------

namespace {

constexpr double kMebSlack = 1.0 + 1e-12;

bool mb_contains(const EnclosingBall2& b, Point2 p) {
    if (b.radius < 0) return false;
    return dist(p, b.center) <= b.radius * kMebSlack;
}
bool mb_contains(const EnclosingBall3& b, Point3 p) {
    if (b.radius < 0) return false;
    return dist(p, b.center) <= b.radius * kMebSlack;
}

template <typename BallT, typename Point>
BallT ball_of_two(Point a, Point b) {
    BallT out;
    out.center = 0.5 * (a + b);
    out.radius = std::max(dist(out.center, a), dist(out.center, b));
    out.support_count = 2;
    out.support[0] = a;
    out.support[1] = b;
    return out;
}

template <typename BallT, typename Point>
BallT farthest_pair_ball(std::span<const Point> pts) {
    double best = -1.0;
    Point pa = pts[0], pb = pts[0];
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (const double d = dist(pts[i], pts[j]); d > best) {
                best = d;
                pa = pts[i];
                pb = pts[j];
            }
    return ball_of_two<BallT, Point>(pa, pb);
}

EnclosingBall2 trivial_ball(std::span<const Point2> support) {
    EnclosingBall2 out;
    switch (support.size()) {
        case 0:
            return out;
        case 1:
            out.center = support[0];
            out.radius = 0.0;
            out.support_count = 1;
            out.support[0] = support[0];
            return out;
        case 2:
            return ball_of_two<EnclosingBall2>(support[0], support[1]);
        default: {
            const Point2 a = support[0];
            const Point2 A = support[1] - a;
            const Point2 B = support[2] - a;
            const double den = 2.0 * (A.x * B.y - A.y * B.x);
            if (std::abs(den) < 1e-30) return farthest_pair_ball<EnclosingBall2>(support);
            const double a2 = dot(A, A);
            const double b2 = dot(B, B);
            const Point2 rel{(B.y * a2 - A.y * b2) / den, (A.x * b2 - B.x * a2) / den};
            out.center = a + rel;
            out.radius = std::max({dist(out.center, support[0]), dist(out.center, support[1]),
                                   dist(out.center, support[2])});
            out.support_count = 3;
            out.support[0] = support[0];
            out.support[1] = support[1];
            out.support[2] = support[2];
            return out;
        }
    }
}

EnclosingBall3 trivial_ball(std::span<const Point3> support) {
    EnclosingBall3 out;
    switch (support.size()) {
        case 0:
            return out;
        case 1:
            out.center = support[0];
            out.radius = 0.0;
            out.support_count = 1;
            out.support[0] = support[0];
            return out;
        case 2:
            return ball_of_two<EnclosingBall3>(support[0], support[1]);
        case 3: {
            // circumcircle of the triangle, solved on the triangle plane
            const Point3 a = support[0];
            const Vec3 A = support[1] - a;
            const Vec3 B = support[2] - a;
            const double a2 = dot(A, A), b2 = dot(B, B), ab = dot(A, B);
            const double det = a2 * b2 - ab * ab;  // |A x B|^2
            if (det < 1e-30) return farthest_pair_ball<EnclosingBall3>(support);
            const double alpha = (a2 * b2 - b2 * ab) / (2.0 * det);
            const double beta = (a2 * b2 - a2 * ab) / (2.0 * det);
            out.center = a + alpha * A + beta * B;
            out.radius = std::max({dist(out.center, support[0]), dist(out.center, support[1]),
                                   dist(out.center, support[2])});
            out.support_count = 3;
            for (int i = 0; i < 3; ++i) out.support[i] = support[i];
            return out;
        }
        default: {
            // circumsphere through four points
            const Point3 a = support[0];
            const Vec3 r1 = support[1] - a, r2 = support[2] - a, r3 = support[3] - a;
            const double det = dot(r1, cross(r2, r3));
            if (std::abs(det) < 1e-30) return farthest_pair_ball<EnclosingBall3>(support);
            const double s1 = 0.5 * dot(r1, r1);
            const double s2 = 0.5 * dot(r2, r2);
            const double s3 = 0.5 * dot(r3, r3);
            const Vec3 rel = (1.0 / det) *
                             (s1 * cross(r2, r3) + s2 * cross(r3, r1) + s3 * cross(r1, r2));
            out.center = a + rel;
            out.radius = std::max({dist(out.center, support[0]), dist(out.center, support[1]),
                                   dist(out.center, support[2]), dist(out.center, support[3])});
            out.support_count = 4;
            for (int i = 0; i < 4; ++i) out.support[i] = support[i];
            return out;
        }
    }
}

// Welzl with move-to-front; support holds the boundary points fixed so far.
template <typename BallT, typename Point>
BallT welzl(std::vector<Point>& pts, std::size_t end, std::vector<Point>& support,
            std::size_t max_support) {
    BallT ball = trivial_ball(std::span<const Point>(support));
    if (support.size() == max_support) return ball;
    for (std::size_t i = 0; i < end; ++i) {
        if (mb_contains(ball, pts[i])) continue;
        support.push_back(pts[i]);
        ball = welzl<BallT>(pts, i, support, max_support);
        support.pop_back();
        std::rotate(pts.begin(), pts.begin() + i, pts.begin() + i + 1);
    }
    return ball;
}

template <typename BallT, typename Point>
BallT meb_impl(std::span<const Point> points, std::uint64_t seed, std::size_t max_support) {
    BallT out;
    if (points.empty()) return out;
    std::vector<Point> pts(points.begin(), points.end());
    std::mt19937_64 gen(seed);
    for (std::size_t i = pts.size(); i > 1; --i) {
        const std::size_t j =
            static_cast<std::size_t>((static_cast<unsigned __int128>(gen()) * i) >> 64);
        std::swap(pts[i - 1], pts[j]);
    }
    std::vector<Point> support;
    support.reserve(max_support);
    return welzl<BallT>(pts, pts.size(), support, max_support);
}

}  // namespace

EnclosingBall2 minimum_enclosing_ball(std::span<const Point2> points, std::uint64_t seed) {
    return meb_impl<EnclosingBall2>(points, seed, 3);
}
EnclosingBall3 minimum_enclosing_ball(std::span<const Point3> points, std::uint64_t seed) {
    return meb_impl<EnclosingBall3>(points, seed, 4);
}

bool verify_meb(std::span<const Point2> centers, double radius, Tolerance tol) {
    return minimum_enclosing_ball(centers).radius <= radius + tol.eps;
}
bool verify_meb(std::span<const Point3> centers, double radius, Tolerance tol) {
    return minimum_enclosing_ball(centers).radius <= radius + tol.eps;
}

// --- full pipelines ----------------------------------------------------------

namespace {

template <typename Element, typename Point, typename RefVerify>
CechComplex<Point> reference_impl(std::span<const Element> elems, const BuildOptions& opt,
                                  RefVerify&& ref, int ambient_dim) {
    validate_dataset(elems);
    if (opt.max_dimension != -1 && opt.max_dimension < 1)
        throw ValidationError("max dimension must be >= 1 (or -1 for unbounded)");

    const int n = static_cast<int>(elems.size());
    CechComplex<Point> cx;
    cx.ambient_dim = ambient_dim;
    cx.eps = opt.tol.eps;

    const auto t_start = Clock::now();
    const NeighborhoodGraph g = build_neighborhood_graph(elems, opt.tol);
    cx.stats.graph_ns = ns_since(t_start);

    ComplexLevel<Point> l0(0);
    for (int i = 0; i < n; ++i) l0.insert(Simplex{{i}}, elems[i].center);
    cx.levels.push_back(std::move(l0));

    const auto t_edges = Clock::now();
    LevelStats st1;
    st1.k = 1;
    st1.candidates = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    ComplexLevel<Point> l1(1);
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors[i])
            if (j > i) l1.insert(Simplex{{i, j}}, edge_witness(elems[i], elems[j], opt.tol));
    st1.cech_count = l1.size();
    st1.verify_ns = ns_since(t_edges);
    st1.total_ns = cx.stats.graph_ns + st1.verify_ns;
    cx.stats.levels.push_back(st1);

    if (!l1.members.empty()) {
        cx.levels.push_back(std::move(l1));
        std::vector<Element> subset;
        int k = 2;
        while (opt.max_dimension == -1 || k <= opt.max_dimension) {
            const auto t0 = Clock::now();
            LevelStats st;
            st.k = k;
            ComplexLevel<Point> level(k);
            subset.resize(k + 1);
            for (int v = 0; v < n; ++v) {
                const auto& nbr = g.neighbors[v];
                const std::vector<int> higher(
                    std::upper_bound(nbr.begin(), nbr.end(), v), nbr.end());
                for_each_combination(higher, k, [&](const std::vector<int>& combo) {
                    ++st.candidates;
                    subset[0] = elems[v];
                    for (int i = 0; i < k; ++i) subset[i + 1] = elems[combo[i]];
                    if (const auto w = ref(std::span<const Element>(subset), opt.tol)) {
                        Simplex s;
                        s.vertices.reserve(k + 1);
                        s.vertices.push_back(v);
                        s.vertices.insert(s.vertices.end(), combo.begin(), combo.end());
                        level.insert(std::move(s), *w);
                    }
                    return true;
                });
            }
            st.cech_count = level.size();
            st.total_ns = ns_since(t0);
            st.verify_ns = st.total_ns;  // enumeration and verification interleave
            cx.stats.levels.push_back(st);
            if (level.members.empty()) break;
            cx.levels.push_back(std::move(level));
            ++k;
        }
    }
    cx.stats.total_ns = ns_since(t_start);
    return cx;
}

template <typename Element, typename Point, typename BallT>
CechComplex<Point> meb_build_impl(std::span<const Element> elems, const BuildOptions& opt) {
    validate_dataset(elems);
    const double r = elems[0].radius;
    for (const Element& e : elems)
        if (e.radius != r)
            throw ValidationError("minimum-enclosing-ball mode requires equal radii");

    std::function<std::optional<Point>(const Simplex&, const Point*, int)> hook =
        [elems, r, tol = opt.tol](const Simplex& base, const Point*, int ext) {
            std::vector<Point> centers;
            centers.reserve(base.vertices.size() + 1);
            for (int v : base.vertices) centers.push_back(elems[v].center);
            centers.push_back(elems[ext].center);
            const BallT meb = minimum_enclosing_ball(std::span<const Point>(centers));
            if (meb.radius <= r + tol.eps) return std::optional<Point>(meb.center);
            return std::optional<Point>();
        };
    return build_complex_with_verifier(elems, opt, hook);
}

}  // namespace

CechComplex2 build_complex_reference(std::span<const Disk> disks, const BuildOptions& opts) {
    return reference_impl<Disk, Point2>(disks, opts, verify_reference_2d, 2);
}
CechComplex3 build_complex_reference(std::span<const Ball> balls, const BuildOptions& opts) {
    return reference_impl<Ball, Point3>(balls, opts, verify_reference_3d, 3);
}

CechComplex2 build_complex_meb(std::span<const Disk> disks, const BuildOptions& opts) {
    return meb_build_impl<Disk, Point2, EnclosingBall2>(disks, opts);
}
CechComplex3 build_complex_meb(std::span<const Ball> balls, const BuildOptions& opts) {
    return meb_build_impl<Ball, Point3, EnclosingBall3>(balls, opts);
}

}  // namespace cech
