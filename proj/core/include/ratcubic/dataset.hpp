#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ratcubic/aut.hpp"

namespace ratcubic {

// One database row.
struct DatasetRecord {
    std::array<std::int64_t, 8> coeffs{};
    int naive_height = 0;             // max |c_i|
    std::array<Rat, 6> xi_raw{};      // unscaled invariants of the tuple
    WeightedPoint xi_norm{};          // wgcd-reduced representative
    double wheight = 0.0;             // weighted moduli height of xi_raw
    Rat i6, j6;
    AutLabel aut = AutLabel::E;       // published-table labeling
    AutLabel aut_exact = AutLabel::E; // representative-independent labeling
    AbsoluteInvariants abs_inv{};
};

struct EnumerationConfig {
    int height_bound = 1;
    bool dedupe_antipodal = true;  // calibrated convention (gives 2248 at h=1)
    int worker_count = 1;
    std::string output_path;
};

// Visits every tuple with all |c_i| <= h, gcd 1, I6 != 0, in lexicographic
// order over (c0..c7); with dedupe_antipodal only the representative whose
// first nonzero coordinate is positive is visited.
void enumerate_tuples(const EnumerationConfig& cfg,
                      const std::function<void(const std::array<std::int64_t, 8>&)>& visit);

// Full record for a tuple that passes the enumeration filters; throws
// NotARationalMap otherwise.
DatasetRecord build_record(const std::array<std::int64_t, 8>& coeffs);

// JSONL persistence. Field names: coeffs, h, xi, xi_norm, wheight, i6, j6,
// aut, aut_exact, abs; exact rationals as "p/q" strings; schema: 1.
void write_jsonl(const std::vector<DatasetRecord>& records, const std::string& path);
void write_jsonl(const std::vector<DatasetRecord>& records, std::ostream& out);
std::vector<DatasetRecord> read_jsonl(const std::string& path);
std::vector<DatasetRecord> read_jsonl(std::istream& in);

// CSV sidecar for the learning harness (columns mirror the JSONL fields).
void write_csv(const std::vector<DatasetRecord>& records, const std::string& path);

// Streaming JSONL -> CSV conversion; bounded memory for large databases.
void convert_jsonl_to_csv(const std::string& jsonl_path, const std::string& csv_path);

// Per-label counts by exact naive height, plus cumulative totals.
struct DatasetStats {
    // stratum[h][label] and cumulative[h][label], labels in enum order
    std::map<int, std::array<std::uint64_t, 8>> stratum;
    std::map<int, std::array<std::uint64_t, 8>> cumulative;
    std::uint64_t total = 0;

    void add(int h, AutLabel l);
    void finalize();
    std::string render() const;  // text table, one row per height stratum
};
DatasetStats stats(const std::vector<DatasetRecord>& records);

// End-to-end generation: static block partition over (c0, c1) prefixes,
// worker-private outputs, deterministic merge in block order. Output is
// byte-identical for any worker count. Returns the stats table.
DatasetStats generate(const EnumerationConfig& cfg);

}  // namespace ratcubic
