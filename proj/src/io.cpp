#include "cech/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cech {
namespace {

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_real(const std::string& field, int line_no) {
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE)
        throw ParseError("malformed number '" + field + "'", line_no);
    return v;
}

int parse_id(const std::string& field, int line_no) {
    int v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size())
        throw ParseError("malformed id '" + field + "'", line_no);
    return v;
}

constexpr const char* kMetaPrefix = "# meta: ";

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Dataset parse_dataset(std::istream& in) {
    Dataset ds;
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError("missing 'dim=<2|3>' header", 1);
    ++line_no;
    line = strip_cr(line);
    if (line == "dim=2")
        ds.dim = 2;
    else if (line == "dim=3")
        ds.dim = 3;
    else
        throw ParseError("expected 'dim=2' or 'dim=3' header, got '" + line + "'", line_no);

    int next_id = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind(kMetaPrefix, 0) == 0) {
                ds.meta = line.substr(std::string(kMetaPrefix).size());
                if (!nlohmann::json::accept(ds.meta))
                    throw ParseError("meta comment is not valid JSON", line_no);
            }
            continue;
        }
        const auto fields = split_fields(line);
        const std::size_t expected = ds.dim == 2 ? 4 : 5;
        if (fields.size() != expected)
            throw ParseError("expected " + std::to_string(expected) + " comma-separated fields",
                             line_no);
        const int id = parse_id(fields[0], line_no);
        if (id != next_id)
            throw ParseError("ids must be contiguous 0..n-1; expected " +
                                 std::to_string(next_id) + ", got " + std::to_string(id),
                             line_no);
        ++next_id;
        if (ds.dim == 2) {
            const double x = parse_real(fields[1], line_no);
            const double y = parse_real(fields[2], line_no);
            const double r = parse_real(fields[3], line_no);
            if (!(r > 0)) throw ParseError("radius must be positive", line_no);
            ds.disks.push_back(Disk{id, Point2{x, y}, r});
        } else {
            const double x = parse_real(fields[1], line_no);
            const double y = parse_real(fields[2], line_no);
            const double z = parse_real(fields[3], line_no);
            const double r = parse_real(fields[4], line_no);
            if (!(r > 0)) throw ParseError("radius must be positive", line_no);
            ds.balls.push_back(Ball{id, Point3{x, y, z}, r});
        }
    }
    if (ds.size() == 0) throw ParseError("dataset has no elements", line_no);
    return ds;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return parse_dataset(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line);
    }
}

void write_dataset(std::ostream& out, const Dataset& ds) {
    out << "dim=" << ds.dim << "\n";
    if (!ds.meta.empty()) out << kMetaPrefix << ds.meta << "\n";
    if (ds.dim == 2) {
        for (const Disk& d : ds.disks)
            out << d.id << ',' << format_double(d.center.x) << ',' << format_double(d.center.y)
                << ',' << format_double(d.radius) << "\n";
    } else {
        for (const Ball& b : ds.balls)
            out << b.id << ',' << format_double(b.center.x) << ',' << format_double(b.center.y)
                << ',' << format_double(b.center.z) << ',' << format_double(b.radius) << "\n";
    }
}

void save_dataset(const std::string& path, const Dataset& ds) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_dataset(out, ds);
}

namespace {

nlohmann::ordered_json witness_json(Point2 p) { return nlohmann::ordered_json::array({p.x, p.y}); }
nlohmann::ordered_json witness_json(Point3 p) {
    return nlohmann::ordered_json::array({p.x, p.y, p.z});
}

nlohmann::ordered_json stats_json(const BenchStats& stats, bool include_timings) {
    nlohmann::ordered_json out;
    if (include_timings) {
        out["graph_ns"] = stats.graph_ns;
        out["total_ns"] = stats.total_ns;
    }
    auto rows = nlohmann::ordered_json::array();
    for (const LevelStats& ls : stats.levels) {
        nlohmann::ordered_json row;
        row["k"] = ls.k;
        row["candidates"] = ls.candidates;
        row["cech_count"] = ls.cech_count;
        row["vr_count"] = ls.vr_count ? nlohmann::ordered_json(*ls.vr_count)
                                      : nlohmann::ordered_json(nullptr);
        if (include_timings) {
            row["verify_ns"] = ls.verify_ns;
            row["total_ns"] = ls.total_ns;
        }
        rows.push_back(std::move(row));
    }
    out["levels"] = std::move(rows);
    return out;
}

template <typename Point>
nlohmann::ordered_json complex_to_json_impl(const CechComplex<Point>& cx,
                                            const ComplexWriteOptions& opt) {
    nlohmann::ordered_json out;
    out["ambient_dim"] = cx.ambient_dim;
    out["eps"] = cx.eps;
    auto levels = nlohmann::ordered_json::array();
    for (const auto& level : cx.levels) {
        std::vector<const Simplex*> sorted;
        sorted.reserve(level.members.size());
        for (const Simplex& s : level.members) sorted.push_back(&s);
        std::sort(sorted.begin(), sorted.end(),
                  [](const Simplex* a, const Simplex* b) { return *a < *b; });

        nlohmann::ordered_json lvl;
        lvl["k"] = level.dimension;
        lvl["count"] = level.members.size();
        auto simplices = nlohmann::ordered_json::array();
        for (const Simplex* s : sorted) simplices.push_back(s->vertices);
        lvl["simplices"] = std::move(simplices);
        if (opt.include_witnesses && level.witnesses.size() == level.members.size()) {
            auto wits = nlohmann::ordered_json::array();
            for (const Simplex* s : sorted) wits.push_back(witness_json(level.witnesses.at(*s)));
            lvl["witnesses"] = std::move(wits);
        }
        levels.push_back(std::move(lvl));
    }
    out["levels"] = std::move(levels);
    out["stats"] = stats_json(cx.stats, opt.include_timings);
    return out;
}

}  // namespace

nlohmann::ordered_json complex_to_json(const CechComplex2& cx, const ComplexWriteOptions& opt) {
    return complex_to_json_impl(cx, opt);
}
nlohmann::ordered_json complex_to_json(const CechComplex3& cx, const ComplexWriteOptions& opt) {
    return complex_to_json_impl(cx, opt);
}

ParsedComplex complex_from_json(const nlohmann::json& j) {
    ParsedComplex out;
    out.ambient_dim = j.at("ambient_dim").get<int>();
    out.eps = j.at("eps").get<double>();
    for (const auto& lvl : j.at("levels")) {
        const auto count = lvl.at("count").get<std::size_t>();
        std::vector<Simplex> simplices;
        for (const auto& verts : lvl.at("simplices"))
            simplices.push_back(Simplex(verts.get<std::vector<int>>()));
        if (simplices.size() != count)
            throw std::runtime_error("complex file: level count does not match simplex array");
        std::sort(simplices.begin(), simplices.end());
        std::optional<std::vector<std::vector<double>>> wits;
        if (lvl.contains("witnesses")) {
            wits.emplace();
            for (const auto& w : lvl.at("witnesses"))
                wits->push_back(w.get<std::vector<double>>());
            if (wits->size() != count)
                throw std::runtime_error("complex file: witness count does not match level count");
        }
        out.levels.push_back(std::move(simplices));
        out.witnesses.push_back(std::move(wits));
    }
    return out;
}

ParsedComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return complex_from_json(j);
}

void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows) {
    out << "mode,k,candidates,cech_count,vr_count,verify_ns,total_ns,run_index\n";
    for (const TimingRow& r : rows) {
        out << r.mode << ',' << r.k << ',' << format_double(r.candidates) << ','
            << format_double(r.cech_count) << ','
            << (r.vr_count ? format_double(*r.vr_count) : std::string()) << ','
            << format_double(r.verify_ns) << ',' << format_double(r.total_ns) << ','
            << r.run_index << "\n";
    }
}

}  // namespace cech
