#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cech/complex_store.hpp"

namespace cech {

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// Disk-set file: header "dim=<2|3>", optional "# meta: <json>" comment, one
// element per line ("id,x,y,r" or "id,x,y,z,r"), 17 significant digits.
struct Dataset {
    int dim = 2;
    std::string meta;  // raw meta JSON text, empty when absent
    std::vector<Disk> disks;
    std::vector<Ball> balls;

    std::size_t size() const { return dim == 2 ? disks.size() : balls.size(); }
};

Dataset parse_dataset(std::istream& in);
Dataset load_dataset(const std::string& path);
void write_dataset(std::ostream& out, const Dataset& ds);
void save_dataset(const std::string& path, const Dataset& ds);

// Round-trip-exact decimal text (17 significant digits).
std::string format_double(double v);

struct ComplexWriteOptions {
    bool include_witnesses = false;
    bool include_timings = true;  // timing fields are dropped under --deterministic
};

nlohmann::ordered_json complex_to_json(const CechComplex2& cx, const ComplexWriteOptions& = {});
nlohmann::ordered_json complex_to_json(const CechComplex3& cx, const ComplexWriteOptions& = {});

// Parsed complex file, enough for comparison and round-trip checks.
struct ParsedComplex {
    int ambient_dim = 0;
    double eps = 0.0;
    std::vector<std::vector<Simplex>> levels;  // sorted lexicographically
    std::vector<std::optional<std::vector<std::vector<double>>>> witnesses;  // aligned
};

ParsedComplex complex_from_json(const nlohmann::json& j);
ParsedComplex load_complex(const std::string& path);

// TimingTable CSV row; summary rows use run_index "mean"/"stddev".
struct TimingRow {
    std::string mode;
    int k = 0;
    double candidates = 0;
    double cech_count = 0;
    std::optional<double> vr_count;
    double verify_ns = 0;
    double total_ns = 0;
    std::string run_index;
};

void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows);

}  // namespace cech
