#include "cech/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "cech/baselines.hpp"
#include "cech/construct.hpp"
#include "cech/datagen.hpp"
#include "cech/io.hpp"

namespace cech::cli {
namespace {

constexpr std::uint64_t kRadiiSeedSalt = 0x5deece66dull;

// --- build -------------------------------------------------------------------

struct BuildArgs {
    std::string input;
    std::string output;
    int dim = 0;  // 0: take from the file header
    int max_k = -1;
    std::string mode = "improved";
    std::string helly = "faces";
    double eps = 1e-9;
    int threads = 1;
    bool deterministic = false;
    bool witnesses = false;
};

VerifyMode parse_helly(const std::string& h) {
    if (h == "none") return VerifyMode::Geometric;
    if (h == "subsets") return VerifyMode::HellySubsets;
    return VerifyMode::HellyFaces;
}

template <typename Element>
nlohmann::ordered_json build_to_json(std::span<const Element> elems, const BuildArgs& a) {
    BuildOptions opt;
    opt.max_dimension = a.max_k;
    opt.tol.eps = a.eps;
    opt.threads = a.threads;
    opt.deterministic = a.deterministic;
    opt.keep_all_witnesses = a.witnesses;
    opt.verify_mode = a.mode == "improved" ? parse_helly(a.helly) : VerifyMode::Geometric;

    CechComplex<typename std::conditional_t<std::is_same_v<Element, Disk>, Point2, Point3>> cx;
    if (a.mode == "improved")
        cx = build_complex(elems, opt);
    else if (a.mode == "reference")
        cx = build_complex_reference(elems, opt);
    else
        cx = build_complex_meb(elems, opt);
    return complex_to_json(cx, ComplexWriteOptions{a.witnesses, !a.deterministic});
}

int do_build(const BuildArgs& a) {
    const Dataset ds = load_dataset(a.input);
    if (a.dim != 0 && a.dim != ds.dim)
        throw ValidationError("--dim does not match the file header (file has dim=" +
                              std::to_string(ds.dim) + ")");
    const nlohmann::ordered_json j =
        ds.dim == 2 ? build_to_json(std::span<const Disk>(ds.disks), a)
                    : build_to_json(std::span<const Ball>(ds.balls), a);
    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot open '" + a.output + "' for writing");
    out << j.dump() << "\n";
    return 0;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string output;
    std::string preset;
    int dim = 2;
    std::string distribution = "uniform";  // uniform | poisson
    std::vector<double> extent;            // box side lengths, origin 0
    int count = 0;
    double spacing = 0.0;
    double radius = 1.0;
    double alpha_lo = 0.3;
    double alpha_hi = 1.0;
    std::uint64_t seed = 1;
};

// Desk-scale analogs of the benchmark datasets; densities are approximate.
const std::map<std::string, GenArgs>& presets() {
    static const std::map<std::string, GenArgs> table = [] {
        std::map<std::string, GenArgs> m;
        auto add = [&](const char* name, int dim, const char* dist, std::vector<double> ext,
                       int count, double spacing, double R, double alo, double ahi,
                       std::uint64_t seed) {
            GenArgs g;
            g.preset = name;
            g.dim = dim;
            g.distribution = dist;
            g.extent = std::move(ext);
            g.count = count;
            g.spacing = spacing;
            g.radius = R;
            g.alpha_lo = alo;
            g.alpha_hi = ahi;
            g.seed = seed;
            m[name] = std::move(g);
        };
        add("even-40", 2, "poisson", {20, 20}, 0, 3.0, 2.4, 0.3, 1.0, 1040);
        add("random-40", 2, "uniform", {20, 20}, 40, 0, 2.6, 0.3, 1.0, 2040);
        add("even-90", 2, "poisson", {30, 30}, 0, 2.7, 2.2, 0.3, 1.0, 1090);
        add("random-90", 2, "uniform", {30, 30}, 90, 0, 3.2, 0.3, 1.0, 2090);
        add("even-150", 2, "poisson", {30, 30}, 0, 2.05, 1.7, 0.3, 1.0, 1150);
        add("random-150", 2, "uniform", {36, 36}, 150, 0, 3.0, 0.3, 1.0, 2150);
        add("even-10k", 2, "poisson", {100, 100}, 0, 0.84, 0.7, 0.3, 1.0, 11000);
        add("standard-150", 2, "uniform", {30, 30}, 150, 0, 2.2, 1.0, 1.0, 3150);
        add("standard-150-3d", 3, "uniform", {12, 12, 12}, 150, 0, 2.2, 1.0, 1.0, 3151);
        return m;
    }();
    return table;
}

int do_gen(GenArgs a) {
    if ((a.count > 0) == (a.spacing > 0))
        throw ValidationError("exactly one of --count (uniform) or --spacing (poisson) is required");
    if (a.distribution != "uniform" && a.distribution != "poisson")
        throw ValidationError("--distribution must be uniform or poisson");
    if ((a.distribution == "poisson") != (a.spacing > 0))
        throw ValidationError("poisson needs --spacing, uniform needs --count");
    if (a.extent.size() != static_cast<std::size_t>(a.dim))
        throw ValidationError("--extent needs one side length per dimension");
    for (double side : a.extent)
        if (!(side > 0)) throw ValidationError("extent sides must be positive");

    Dataset ds;
    ds.dim = a.dim;
    if (a.dim == 2) {
        const Box2 box{0, 0, a.extent[0], a.extent[1]};
        const std::vector<Point2> pos = a.distribution == "poisson"
                                            ? poisson_disk_positions(box, a.spacing, a.seed)
                                            : uniform_positions(box, a.count, a.seed);
        const std::vector<double> radii = sample_radii(static_cast<int>(pos.size()), a.radius,
                                                       a.alpha_lo, a.alpha_hi,
                                                       a.seed ^ kRadiiSeedSalt);
        ds.disks = make_disks(pos, radii);
    } else {
        const Box3 box{0, 0, 0, a.extent[0], a.extent[1], a.extent[2]};
        const std::vector<Point3> pos = a.distribution == "poisson"
                                            ? poisson_disk_positions(box, a.spacing, a.seed)
                                            : uniform_positions(box, a.count, a.seed);
        const std::vector<double> radii = sample_radii(static_cast<int>(pos.size()), a.radius,
                                                       a.alpha_lo, a.alpha_hi,
                                                       a.seed ^ kRadiiSeedSalt);
        ds.balls = make_balls(pos, radii);
    }
    if (ds.size() == 0) throw ValidationError("generator produced no elements; enlarge the extent");

    nlohmann::ordered_json meta;
    if (!a.preset.empty()) meta["preset"] = a.preset;
    meta["generator"] = "mt19937_64/53-bit";
    meta["distribution"] = a.distribution;
    meta["extent"] = a.extent;
    if (a.spacing > 0)
        meta["spacing"] = a.spacing;
    else
        meta["count"] = a.count;
    meta["base_radius"] = a.radius;
    meta["alpha"] = {a.alpha_lo, a.alpha_hi};
    meta["seed"] = a.seed;
    ds.meta = meta.dump();

    save_dataset(a.output, ds);
    std::cout << "wrote " << ds.size() << " elements (dim=" << ds.dim << ") to " << a.output
              << "\n";
    return 0;
}

// --- bench -------------------------------------------------------------------

struct BenchArgs {
    std::string input;
    std::string output;
    std::vector<std::string> modes{"improved", "reference"};
    int runs = 7;
    double eps = 1e-9;
    int threads = 1;
    int max_k = -1;
    bool vr = true;
};

BuildOptions bench_options(const BenchArgs& a, const std::string& mode) {
    BuildOptions opt;
    opt.max_dimension = a.max_k;
    opt.tol.eps = a.eps;
    opt.threads = a.threads;
    if (mode == "helly-faces") opt.verify_mode = VerifyMode::HellyFaces;
    if (mode == "helly-subsets") opt.verify_mode = VerifyMode::HellySubsets;
    return opt;
}

template <typename Element>
BenchStats bench_one(std::span<const Element> elems, const BenchArgs& a, const std::string& mode) {
    const BuildOptions opt = bench_options(a, mode);
    if (mode == "reference") return build_complex_reference(elems, opt).stats;
    if (mode == "meb") return build_complex_meb(elems, opt).stats;
    return build_complex(elems, opt).stats;
}

template <typename Element>
int bench_impl(std::span<const Element> elems, const BenchArgs& a) {
    for (const std::string& m : a.modes)
        if (m != "improved" && m != "reference" && m != "meb" && m != "helly-faces" &&
            m != "helly-subsets")
            throw ValidationError("unknown mode '" + m + "'");
    if (a.runs < 1) throw ValidationError("--runs must be >= 1");

    // VR counts are attached to incremental-enumeration modes only; the
    // reference enumeration can visit candidate sets beyond the VR complex.
    std::vector<std::uint64_t> vr_counts;
    if (a.vr) {
        Tolerance tol{a.eps};
        const NeighborhoodGraph g = build_neighborhood_graph(elems, tol);
        const VRComplex vr = vr_complex(g, a.max_k);
        for (const auto& lvl : vr.levels) vr_counts.push_back(lvl.size());
    }
    auto vr_of = [&](const std::string& mode, int k) -> std::optional<double> {
        if (!a.vr || mode == "reference") return std::nullopt;
        if (k < static_cast<int>(vr_counts.size())) return static_cast<double>(vr_counts[k]);
        return 0.0;
    };

    std::vector<TimingRow> rows;
    for (const std::string& mode : a.modes) {
        std::vector<BenchStats> all_runs;
        for (int run = 0; run < a.runs; ++run)
            all_runs.push_back(bench_one(elems, a, mode));

        for (int run = 0; run < a.runs; ++run)
            for (const LevelStats& ls : all_runs[run].levels)
                rows.push_back(TimingRow{mode, ls.k, static_cast<double>(ls.candidates),
                                         static_cast<double>(ls.cech_count), vr_of(mode, ls.k),
                                         static_cast<double>(ls.verify_ns),
                                         static_cast<double>(ls.total_ns),
                                         std::to_string(run)});

        // summary rows per dimension
        const std::size_t levels = all_runs.front().levels.size();
        for (std::size_t li = 0; li < levels; ++li) {
            auto column = [&](auto getter) {
                std::vector<double> vals;
                for (const BenchStats& st : all_runs)
                    vals.push_back(static_cast<double>(getter(st.levels[li])));
                return vals;
            };
            auto mean = [](const std::vector<double>& v) {
                double s = 0;
                for (double x : v) s += x;
                return s / static_cast<double>(v.size());
            };
            auto stddev = [&](const std::vector<double>& v) {
                const double m = mean(v);
                double s = 0;
                for (double x : v) s += (x - m) * (x - m);
                return std::sqrt(s / static_cast<double>(v.size() - 1));
            };
            const int k = all_runs.front().levels[li].k;
            const auto cand = column([](const LevelStats& l) { return l.candidates; });
            const auto cech = column([](const LevelStats& l) { return l.cech_count; });
            const auto ver = column([](const LevelStats& l) { return l.verify_ns; });
            const auto tot = column([](const LevelStats& l) { return l.total_ns; });
            rows.push_back(TimingRow{mode, k, mean(cand), mean(cech), vr_of(mode, k), mean(ver),
                                     mean(tot), "mean"});
            if (a.runs > 1)
                rows.push_back(TimingRow{mode, k, stddev(cand), stddev(cech), std::nullopt,
                                         stddev(ver), stddev(tot), "stddev"});
        }
    }

    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot open '" + a.output + "' for writing");
    write_timing_csv(out, rows);
    return 0;
}

int do_bench(const BenchArgs& a) {
    const Dataset ds = load_dataset(a.input);
    if (ds.dim == 2) return bench_impl(std::span<const Disk>(ds.disks), a);
    return bench_impl(std::span<const Ball>(ds.balls), a);
}

// --- compare -----------------------------------------------------------------

std::string simplex_str(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) os << ',';
        os << s.vertices[i];
    }
    os << '}';
    return os.str();
}

int do_compare(const std::string& path_a, const std::string& path_b) {
    const ParsedComplex a = load_complex(path_a);
    const ParsedComplex b = load_complex(path_b);
    if (a.ambient_dim != b.ambient_dim)
        throw ValidationError("ambient dimension mismatch (" + std::to_string(a.ambient_dim) +
                              " vs " + std::to_string(b.ambient_dim) + ")");
    const std::size_t levels = std::max(a.levels.size(), b.levels.size());
    static const std::vector<Simplex> kEmpty;
    bool equal = true;
    for (std::size_t k = 0; k < levels; ++k) {
        const auto& la = k < a.levels.size() ? a.levels[k] : kEmpty;
        const auto& lb = k < b.levels.size() ? b.levels[k] : kEmpty;
        std::vector<Simplex> only_a, only_b;
        std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(only_a));
        std::set_difference(lb.begin(), lb.end(), la.begin(), la.end(), std::back_inserter(only_b));
        if (only_a.empty() && only_b.empty()) continue;
        equal = false;
        std::cout << "level " << k << ":";
        for (const Simplex& s : only_a) std::cout << " -" << simplex_str(s);
        for (const Simplex& s : only_b) std::cout << " +" << simplex_str(s);
        std::cout << "\n";
    }
    if (equal) std::cout << "identical\n";
    return equal ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"generalized Cech complex construction for disks and balls"};
    app.require_subcommand(1);

    BuildArgs build;
    CLI::App* cmd_build = app.add_subcommand("build", "construct a complex from a disk-set file");
    cmd_build->add_option("input", build.input, "disk-set file")->required();
    cmd_build->add_option("-o,--output", build.output, "complex JSON output path")->required();
    cmd_build->add_option("--dim", build.dim, "expected ambient dimension (validated against the file)")
        ->check(CLI::IsMember({2, 3}));
    cmd_build->add_option("--max-k", build.max_k, "highest simplex dimension (-1: until empty)");
    cmd_build->add_option("--mode", build.mode, "improved | reference | meb")
        ->check(CLI::IsMember({"improved", "reference", "meb"}));
    cmd_build->add_option("--helly", build.helly,
                          "high-dimension shortcut for improved mode: none | subsets | faces")
        ->check(CLI::IsMember({"none", "subsets", "faces"}));
    cmd_build->add_option("--eps", build.eps, "absolute tolerance (flag only, no environment override)");
    cmd_build->add_option("--threads", build.threads, "verification threads (0: all cores)");
    cmd_build->add_flag("--deterministic", build.deterministic,
                        "sorted iteration and timing-free output; byte-identical across runs");
    cmd_build->add_flag("--witnesses", build.witnesses, "retain and emit all witness points");

    GenArgs gen;
    std::string preset_name;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a dataset");
    cmd_gen->add_option("output", gen.output, "output disk-set file")->required();
    cmd_gen->add_option("--preset", preset_name, "named preset (see README)");
    cmd_gen->add_option("--dim", gen.dim)->check(CLI::IsMember({2, 3}));
    cmd_gen->add_option("--distribution", gen.distribution, "uniform | poisson");
    cmd_gen->add_option("--extent", gen.extent, "box side lengths (origin 0)");
    cmd_gen->add_option("--count", gen.count, "element count (uniform)");
    cmd_gen->add_option("--spacing", gen.spacing, "minimum spacing (poisson)");
    cmd_gen->add_option("--radius", gen.radius, "base radius R");
    cmd_gen->add_option("--alpha-lo", gen.alpha_lo, "radius scale lower bound");
    cmd_gen->add_option("--alpha-hi", gen.alpha_hi, "radius scale upper bound");
    CLI::Option* seed_opt = cmd_gen->add_option("--seed", gen.seed, "generator seed");

    BenchArgs bench;
    CLI::App* cmd_bench = app.add_subcommand("bench", "timing harness (7-run protocol)");
    cmd_bench->add_option("input", bench.input, "disk-set file")->required();
    cmd_bench->add_option("-o,--output", bench.output, "timing CSV output path")->required();
    cmd_bench->add_option("--modes", bench.modes,
                          "improved | reference | meb | helly-faces | helly-subsets")
        ->delimiter(',');
    cmd_bench->add_option("--runs", bench.runs, "repetitions per mode");
    cmd_bench->add_option("--eps", bench.eps, "absolute tolerance");
    cmd_bench->add_option("--threads", bench.threads, "verification threads");
    cmd_bench->add_option("--max-k", bench.max_k, "dimension cap (-1: until empty)");
    cmd_bench->add_flag("!--no-vr", bench.vr, "skip Vietoris-Rips counts");

    std::string cmp_a, cmp_b;
    CLI::App* cmd_compare = app.add_subcommand("compare", "diff two complex files");
    cmd_compare->add_option("a", cmp_a, "first complex JSON")->required();
    cmd_compare->add_option("b", cmp_b, "second complex JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_build) return do_build(build);
        if (*cmd_gen) {
            if (!preset_name.empty()) {
                const auto it = presets().find(preset_name);
                if (it == presets().end())
                    throw ValidationError("unknown preset '" + preset_name + "'");
                const std::string output = gen.output;
                const std::uint64_t seed = gen.seed;
                const bool seed_overridden = seed_opt->count() > 0;
                gen = it->second;
                gen.output = output;
                if (seed_overridden) gen.seed = seed;
            }
            return do_gen(gen);
        }
        if (*cmd_bench) return do_bench(bench);
        if (*cmd_compare) return do_compare(cmp_a, cmp_b);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace cech::cli
