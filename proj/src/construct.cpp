#include "cech/construct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <thread>
#include <type_traits>
#include <unordered_map>

#include "cech/helly.hpp"

namespace cech {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point t0) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
bool finite(Point3 p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

template <typename Element>
void validate_impl(std::span<const Element> elems) {
    if (elems.empty()) throw ValidationError("dataset is empty");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto& e = elems[i];
        if (e.id != static_cast<int>(i))
            throw ValidationError("element ids must be contiguous 0..n-1 (element " +
                                  std::to_string(i) + " has id " + std::to_string(e.id) + ")");
        if (!(e.radius > 0.0) || !std::isfinite(e.radius))
            throw ValidationError("element " + std::to_string(i) + " has non-positive radius");
        if (!finite(e.center))
            throw ValidationError("element " + std::to_string(i) + " has non-finite center");
    }
}

template <typename Element>
NeighborhoodGraph graph_all_pairs(std::span<const Element> elems, Tolerance tol) {
    const int n = static_cast<int>(elems.size());
    NeighborhoodGraph g;
    g.neighbors.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(elems[i].center, elems[j].center) <=
                elems[i].radius + elems[j].radius + tol.eps) {
                g.neighbors[i].push_back(j);
                g.neighbors[j].push_back(i);
            }
    return g;  // lists come out sorted by the loop order
}

// Bucket index with cell size 2*max_r: any intersecting pair sits in the same
// or an adjacent cell.
NeighborhoodGraph graph_grid(std::span<const Disk> disks, Tolerance tol) {
    const int n = static_cast<int>(disks.size());
    double max_r = 0;
    for (const Disk& d : disks) max_r = std::max(max_r, d.radius);
    const double cell = 2.0 * max_r + tol.eps;

    auto key_of = [&](Point2 p) {
        const auto kx = static_cast<std::int32_t>(std::floor(p.x / cell));
        const auto ky = static_cast<std::int32_t>(std::floor(p.y / cell));
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(kx)) << 32) |
               static_cast<std::uint32_t>(ky);
    };
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i) buckets[key_of(disks[i].center)].push_back(i);

    NeighborhoodGraph g;
    g.neighbors.resize(n);
    for (int i = 0; i < n; ++i) {
        const Point2 c = disks[i].center;
        const auto bx = static_cast<std::int32_t>(std::floor(c.x / cell));
        const auto by = static_cast<std::int32_t>(std::floor(c.y / cell));
        for (std::int32_t dx = -1; dx <= 1; ++dx)
            for (std::int32_t dy = -1; dy <= 1; ++dy) {
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(bx + dx)) << 32) |
                    static_cast<std::uint32_t>(by + dy);
                auto it = buckets.find(key);
                if (it == buckets.end()) continue;
                for (int j : it->second) {
                    if (j <= i) continue;
                    if (dist(c, disks[j].center) <= disks[i].radius + disks[j].radius + tol.eps) {
                        g.neighbors[i].push_back(j);
                        g.neighbors[j].push_back(i);
                    }
                }
            }
    }
    for (auto& nbr : g.neighbors) std::sort(nbr.begin(), nbr.end());
    return g;
}

constexpr int kGridThreshold = 1024;

template <typename Element, typename Point>
Point edge_witness_impl(const Element& a, const Element& b, Tolerance tol) {
    const double eps = tol.eps;
    const double d = dist(a.center, b.center);
    if (d + a.radius <= b.radius + eps) return a.center;
    if (d + b.radius <= a.radius + eps) return b.center;
    double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    t = std::clamp(t, d - b.radius, a.radius);
    return a.center + (t / d) * (b.center - a.center);
}

// --- generic level construction -------------------------------------------

template <typename Point>
struct Verdict {
    bool accepted = false;
    std::optional<Point> witness;
};

template <typename Point>
struct PrevSnapshot {
    std::vector<const Simplex*> simplices;
    std::vector<const Point*> witnesses;
};

template <typename Point>
PrevSnapshot<Point> snapshot_level(const ComplexLevel<Point>& prev, bool deterministic) {
    PrevSnapshot<Point> snap;
    snap.simplices.reserve(prev.members.size());
    for (const Simplex& s : prev.members) snap.simplices.push_back(&s);
    if (deterministic)
        std::sort(snap.simplices.begin(), snap.simplices.end(),
                  [](const Simplex* a, const Simplex* b) { return *a < *b; });
    snap.witnesses.reserve(snap.simplices.size());
    for (const Simplex* s : snap.simplices) snap.witnesses.push_back(prev.witness(*s));
    return snap;
}

struct RawCandidate {
    std::uint32_t base;
    int vertex;
};

template <typename Point>
std::vector<RawCandidate> enumerate_candidates(const PrevSnapshot<Point>& snap,
                                               const NeighborhoodGraph& g) {
    std::vector<RawCandidate> out;
    for (std::uint32_t bi = 0; bi < snap.simplices.size(); ++bi) {
        const Simplex& s = *snap.simplices[bi];
        const std::vector<int> nbrs = common_neighbors(g, s);
        auto it = std::upper_bound(nbrs.begin(), nbrs.end(), s.max_vertex());
        for (; it != nbrs.end(); ++it) out.push_back({bi, *it});
    }
    return out;
}

int resolve_threads(int requested) {
    if (requested > 0) return std::min(requested, 256);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Point, typename Verifier>
ComplexLevel<Point> run_level(const ComplexLevel<Point>& prev, const NeighborhoodGraph& g, int k,
                              const BuildOptions& opt, const Verifier& verify,
                              LevelStats* stats_out) {
    const auto t0 = Clock::now();
    LevelStats st;
    st.k = k;

    const PrevSnapshot<Point> snap = snapshot_level(prev, opt.deterministic);
    const std::vector<RawCandidate> cands = enumerate_candidates(snap, g);
    st.candidates = cands.size();

    std::vector<std::uint8_t> accepted(cands.size(), 0);
    std::vector<std::uint8_t> has_wit(cands.size(), 0);
    std::vector<Point> wit(cands.size());

    const auto t1 = Clock::now();
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const RawCandidate& c = cands[i];
            const Verdict<Point> v = verify(*snap.simplices[c.base], snap.witnesses[c.base], c.vertex);
            accepted[i] = v.accepted ? 1 : 0;
            if (v.witness) {
                has_wit[i] = 1;
                wit[i] = *v.witness;
            }
        }
    };
    const int threads = resolve_threads(opt.threads);
    if (threads <= 1 || cands.size() < 2048) {
        work(0, cands.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cands.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(cands.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    st.verify_ns = ns_since(t1);

    ComplexLevel<Point> level(k);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!accepted[i]) continue;
        Simplex s = with_vertex(*snap.simplices[cands[i].base], cands[i].vertex);
        level.insert(std::move(s), has_wit[i] ? std::optional<Point>(wit[i]) : std::nullopt);
    }
    st.cech_count = level.size();
    st.total_ns = ns_since(t0);
    if (stats_out) *stats_out = st;
    return level;
}

std::optional<Point2> verify_dispatch(const Simplex& s, const Disk& d, Point2 cached,
                                      std::span<const Disk> all, Tolerance tol) {
    return verify_candidate_2d(s, d, cached, all, tol);
}
std::optional<Point3> verify_dispatch(const Simplex& s, const Ball& b, Point3 cached,
                                      std::span<const Ball> all, Tolerance tol) {
    return verify_candidate_3d(s, b, cached, all, tol);
}

template <typename Element>
constexpr int ambient_of = std::is_same_v<Element, Disk> ? 2 : 3;

template <typename Element, typename Point>
struct ModeVerifier {
    std::span<const Element> elems;
    Tolerance tol;
    VerifyMode mode = VerifyMode::Geometric;
    int k = 0;
    const SimplexSet* prev_members = nullptr;
    const SimplexSet* ambient_members = nullptr;
    const std::function<std::optional<Point>(const Simplex&, const Point*, int)>* hook = nullptr;

    Verdict<Point> operator()(const Simplex& base, const Point* cached, int ext) const {
        if (hook) {
            auto w = (*hook)(base, cached, ext);
            return {w.has_value(), std::move(w)};
        }
        constexpr int ambient = ambient_of<Element>;
        if (k > ambient && mode == VerifyMode::HellyFaces)
            return {verify_helly_faces(with_vertex(base, ext), *prev_members, ambient,
                                       /*skip_omit_max=*/true),
                    std::nullopt};
        if (k > ambient && mode == VerifyMode::HellySubsets)
            return {verify_helly_subsets(with_vertex(base, ext), *ambient_members, ambient),
                    std::nullopt};
        if (!cached) throw std::logic_error("geometric verification requires a cached witness");
        auto w = verify_dispatch(base, elems[ext], *cached, elems, tol);
        return {w.has_value(), std::move(w)};
    }
};

template <typename Element, typename Point>
CechComplex<Point> build_impl(
    std::span<const Element> elems, const BuildOptions& opt,
    const std::function<std::optional<Point>(const Simplex&, const Point*, int)>* hook) {
    validate_dataset(elems);
    if (opt.max_dimension != -1 && opt.max_dimension < 1)
        throw ValidationError("max dimension must be >= 1 (or -1 for unbounded)");
    if (!(opt.tol.eps >= 0.0)) throw ValidationError("eps must be non-negative");

    const int n = static_cast<int>(elems.size());
    CechComplex<Point> cx;
    cx.ambient_dim = ambient_of<Element>;
    cx.eps = opt.tol.eps;

    const auto t_start = Clock::now();
    NeighborhoodGraph g = build_neighborhood_graph(elems, opt.tol);
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

    if (!l1.members.empty() && (opt.max_dimension == -1 || opt.max_dimension >= 1)) {
        cx.levels.push_back(std::move(l1));
        int k = 2;
        while (opt.max_dimension == -1 || k <= opt.max_dimension) {
            // memory policy: only levels k-1 and k keep witness maps
            if (!opt.keep_all_witnesses) cx.levels[k - 2].witnesses = {};
            const ComplexLevel<Point>& prev = cx.levels[k - 1];
            ModeVerifier<Element, Point> verify{elems, opt.tol, opt.verify_mode, k,
                                                &prev.members,
                                                k > cx.ambient_dim &&
                                                        cx.ambient_dim < static_cast<int>(cx.levels.size())
                                                    ? &cx.levels[cx.ambient_dim].members
                                                    : nullptr,
                                                hook};
            LevelStats st;
            ComplexLevel<Point> level = run_level(prev, g, k, opt, verify, &st);
            cx.stats.levels.push_back(st);
            if (level.members.empty()) break;
            cx.levels.push_back(std::move(level));
            ++k;
        }
    }
    cx.stats.total_ns = ns_since(t_start);
    return cx;
}

}  // namespace

void validate_dataset(std::span<const Disk> disks) { validate_impl(disks); }
void validate_dataset(std::span<const Ball> balls) { validate_impl(balls); }

NeighborhoodGraph build_neighborhood_graph(std::span<const Disk> disks, Tolerance tol) {
    if (disks.size() >= kGridThreshold) return graph_grid(disks, tol);
    return graph_all_pairs(disks, tol);
}

NeighborhoodGraph build_neighborhood_graph(std::span<const Ball> balls, Tolerance tol) {
    return graph_all_pairs(balls, tol);
}

std::vector<Candidate> generate_candidates(const SimplexSet& prev_level,
                                           const NeighborhoodGraph& g, bool deterministic) {
    std::vector<const Simplex*> snapshot;
    snapshot.reserve(prev_level.size());
    for (const Simplex& s : prev_level) snapshot.push_back(&s);
    if (deterministic)
        std::sort(snapshot.begin(), snapshot.end(),
                  [](const Simplex* a, const Simplex* b) { return *a < *b; });
    std::vector<Candidate> out;
    for (const Simplex* s : snapshot) {
        const std::vector<int> nbrs = common_neighbors(g, *s);
        auto it = std::upper_bound(nbrs.begin(), nbrs.end(), s->max_vertex());
        for (; it != nbrs.end(); ++it) out.push_back({*s, *it});
    }
    return out;
}

std::optional<Point2> verify_candidate_2d(const Simplex& s_prev, const Disk& d, Point2 cached_p,
                                          std::span<const Disk> all_disks, Tolerance tol) {
    // branch 1: smallest disk of the candidate contained in all others
    const Disk* smallest = &d;
    for (int v : s_prev.vertices) {
        const Disk& di = all_disks[v];
        if (di.radius < smallest->radius ||
            (di.radius == smallest->radius && di.id < smallest->id))
            smallest = &di;
    }
    bool inside_all = smallest->id == d.id || disk_in_disk(*smallest, d, tol);
    if (inside_all)
        for (int v : s_prev.vertices) {
            const Disk& di = all_disks[v];
            if (di.id == smallest->id) continue;
            if (!disk_in_disk(*smallest, di, tol)) {
                inside_all = false;
                break;
            }
        }
    if (inside_all) return smallest->center;

    // branch 2: the cached witness survives the new disk
    if (point_in_disk(cached_p, d, tol)) return cached_p;

    // branch 3: boundary of d against each member of s_prev
    auto in_candidate = [&](Point2 p) {
        if (!point_in_disk(p, d, tol)) return false;
        for (int v : s_prev.vertices)
            if (!point_in_disk(p, all_disks[v], tol)) return false;
        return true;
    };
    for (int v : s_prev.vertices) {
        const CircleIntersections X = circle_circle_intersections(all_disks[v], d, tol);
        if (X.identical) continue;
        for (int i = 0; i < X.count; ++i)
            if (in_candidate(X.points[i])) return X.points[i];
    }
    return std::nullopt;
}

namespace {

// 2D containment logic inside a crease plane. sections[0] is the disk bounded
// by the crease circle itself.
std::optional<Point2> planar_witness(std::span<const Disk> sections, Tolerance tol) {
    const Disk* smallest = &sections[0];
    for (const Disk& s : sections.subspan(1))
        if (s.radius < smallest->radius ||
            (s.radius == smallest->radius && s.id < smallest->id))
            smallest = &s;
    bool inside_all = true;
    for (const Disk& s : sections) {
        if (&s == smallest) continue;
        if (!disk_in_disk(*smallest, s, tol)) {
            inside_all = false;
            break;
        }
    }
    if (inside_all) return smallest->center;

    for (const Disk& s : sections.subspan(1)) {
        const CircleIntersections X = circle_circle_intersections(sections[0], s, tol);
        if (X.identical) continue;
        for (int i = 0; i < X.count; ++i)
            if (point_in_all(X.points[i], sections, tol)) return X.points[i];
    }
    return std::nullopt;
}

}  // namespace

std::optional<Point3> verify_candidate_3d(const Simplex& s_prev, const Ball& b, Point3 cached_p,
                                          std::span<const Ball> all_balls, Tolerance tol) {
    // branch 1: smallest ball of the candidate contained in all others
    const Ball* smallest = &b;
    for (int v : s_prev.vertices) {
        const Ball& bi = all_balls[v];
        if (bi.radius < smallest->radius ||
            (bi.radius == smallest->radius && bi.id < smallest->id))
            smallest = &bi;
    }
    bool inside_all = smallest->id == b.id || ball_in_ball(*smallest, b, tol);
    if (inside_all)
        for (int v : s_prev.vertices) {
            const Ball& bi = all_balls[v];
            if (bi.id == smallest->id) continue;
            if (!ball_in_ball(*smallest, bi, tol)) {
                inside_all = false;
                break;
            }
        }
    if (inside_all) return smallest->center;

    // branch 2
    if (point_in_ball(cached_p, b, tol)) return cached_p;

    // branch 3: each crease of b against a member reduces the search to the
    // crease plane; the crease disk stands for both of its parent balls.
    std::vector<Disk> sections;
    sections.reserve(s_prev.vertices.size() + 1);
    for (int vi : s_prev.vertices) {
        const SphereIntersection ss = sphere_sphere_intersection(all_balls[vi], b, tol);
        if (ss.identical || !ss.circle) continue;
        const Circle3& crease = *ss.circle;
        const Plane& f = crease.plane;
        sections.clear();
        sections.push_back(Disk{b.id, Point2{0.0, 0.0}, crease.radius});
        bool plane_ok = true;
        for (int vj : s_prev.vertices) {
            if (vj == vi) continue;
            const std::optional<Disk> sec = ball_plane_intersection(all_balls[vj], f, tol);
            if (!sec) {
                plane_ok = false;
                break;
            }
            sections.push_back(*sec);
        }
        if (!plane_ok) continue;
        if (const auto w = planar_witness(sections, tol)) return lift_to_3d(*w, f);
    }
    return std::nullopt;
}

Point2 edge_witness(const Disk& a, const Disk& b, Tolerance tol) {
    return edge_witness_impl<Disk, Point2>(a, b, tol);
}
Point3 edge_witness(const Ball& a, const Ball& b, Tolerance tol) {
    return edge_witness_impl<Ball, Point3>(a, b, tol);
}

ComplexLevel2 build_k_simplices(const ComplexLevel2& prev, const NeighborhoodGraph& g,
                                std::span<const Disk> disks, const BuildOptions& opts,
                                LevelStats* stats, const SimplexSet* ambient_simplices) {
    const int k = prev.dimension + 1;
    if (opts.verify_mode == VerifyMode::HellySubsets && k > 2 && !ambient_simplices)
        throw std::logic_error("HellySubsets above the ambient dimension needs the 2-simplex level");
    ModeVerifier<Disk, Point2> verify{disks,          opts.tol, opts.verify_mode, k,
                                      &prev.members,  ambient_simplices, nullptr};
    return run_level(prev, g, k, opts, verify, stats);
}

ComplexLevel3 build_k_simplices(const ComplexLevel3& prev, const NeighborhoodGraph& g,
                                std::span<const Ball> balls, const BuildOptions& opts,
                                LevelStats* stats, const SimplexSet* ambient_simplices) {
    const int k = prev.dimension + 1;
    if (opts.verify_mode == VerifyMode::HellySubsets && k > 3 && !ambient_simplices)
        throw std::logic_error("HellySubsets above the ambient dimension needs the 3-simplex level");
    ModeVerifier<Ball, Point3> verify{balls,          opts.tol, opts.verify_mode, k,
                                      &prev.members,  ambient_simplices, nullptr};
    return run_level(prev, g, k, opts, verify, stats);
}

CechComplex2 build_complex(std::span<const Disk> disks, const BuildOptions& opts) {
    return build_impl<Disk, Point2>(disks, opts, nullptr);
}
CechComplex3 build_complex(std::span<const Ball> balls, const BuildOptions& opts) {
    return build_impl<Ball, Point3>(balls, opts, nullptr);
}

CechComplex2 build_complex_with_verifier(std::span<const Disk> disks, const BuildOptions& opts,
                                         const VerifyHook2& hook) {
    return build_impl<Disk, Point2>(disks, opts, &hook);
}
CechComplex3 build_complex_with_verifier(std::span<const Ball> balls, const BuildOptions& opts,
                                         const VerifyHook3& hook) {
    return build_impl<Ball, Point3>(balls, opts, &hook);
}

}  // namespace cech
