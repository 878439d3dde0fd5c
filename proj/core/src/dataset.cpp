#include "ratcubic/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "invariant_tables.inc"

namespace ratcubic {

namespace {

using Tuple = std::array<std::int64_t, 8>;

// I6 over int64; exact for |c_i| up to ~10^2 (34 terms of degree 6).
std::int64_t i6_int(const Tuple& c) {
    std::int64_t acc = 0;
    for (const auto& t : detail::i6_terms) {
        std::int64_t m = t.coeff;
        for (int v = 0; v < 8; ++v)
            for (int e = 0; e < t.exp[v]; ++e) m *= c[v];
        acc += m;
    }
    return acc;
}

std::int64_t gcd_all(const Tuple& c) {
    std::int64_t g = 0;
    for (auto v : c) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

bool block_zero(const Tuple& c, int base) {
    return c[base] == 0 && c[base + 1] == 0 && c[base + 2] == 0 && c[base + 3] == 0;
}

bool first_nonzero_positive(const Tuple& c) {
    for (auto v : c) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false;
}

RationalMap3 map_of(const Tuple& c) {
    RationalMap3::Coeffs q;
    for (int i = 0; i < 8; ++i) q[i] = Rat(static_cast<long>(c[i]));
    return RationalMap3::raw(std::move(q));
}

}  // namespace

void enumerate_tuples(const EnumerationConfig& cfg,
                      const std::function<void(const Tuple&)>& visit) {
    const int h = cfg.height_bound;
    if (h < 1) throw std::invalid_argument("enumerate_tuples: height_bound < 1");
    if (h > 500) throw std::invalid_argument("enumerate_tuples: height bound exceeds the int64 filter range");
    Tuple c{};
    const std::int64_t lo = -h, hi = h;
    for (c[0] = lo; c[0] <= hi; ++c[0])
     for (c[1] = lo; c[1] <= hi; ++c[1])
      for (c[2] = lo; c[2] <= hi; ++c[2])
       for (c[3] = lo; c[3] <= hi; ++c[3])
        for (c[4] = lo; c[4] <= hi; ++c[4])
         for (c[5] = lo; c[5] <= hi; ++c[5])
          for (c[6] = lo; c[6] <= hi; ++c[6])
           for (c[7] = lo; c[7] <= hi; ++c[7]) {
               if (cfg.dedupe_antipodal && !first_nonzero_positive(c)) continue;
               if (block_zero(c, 0) || block_zero(c, 4)) continue;
               if (gcd_all(c) != 1) continue;
               if (i6_int(c) == 0) continue;
               visit(c);
           }
}

DatasetRecord build_record(const Tuple& coeffs) {
    if (block_zero(coeffs, 0) || block_zero(coeffs, 4) || gcd_all(coeffs) != 1)
        throw NotARationalMap("build_record: tuple fails the enumeration filters");
    const RationalMap3 phi = map_of(coeffs);
    DatasetRecord r;
    r.coeffs = coeffs;
    std::int64_t h = 0;
    for (auto v : coeffs) h = std::max(h, v < 0 ? -v : v);
    r.naive_height = static_cast<int>(h);
    const XiTuple xi = xi_explicit(phi);
    r.xi_raw = xi.xi;
    r.i6 = i6_resultant(phi);
    if (r.i6 == 0) throw NotARationalMap("build_record: I6 = 0");
    r.j6 = j6_from_xi(xi);
    r.xi_norm = normalize_weighted(xi);
    r.wheight = weighted_height(xi.xi);
    r.aut = classify_published(xi, r.i6);
    r.aut_exact = classify(xi, r.i6);
    r.abs_inv = absolute_invariants(xi, r.i6);
    return r;
}

namespace {

nlohmann::json record_to_json(const DatasetRecord& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["coeffs"] = r.coeffs;
    j["h"] = r.naive_height;
    auto rats = [](const auto& arr) {
        std::vector<std::string> v;
        for (const auto& x : arr) v.push_back(to_string(x));
        return v;
    };
    j["xi"] = rats(r.xi_raw);
    {
        std::vector<std::string> v;
        for (const auto& x : r.xi_norm.coords) v.push_back(to_string(x));
        j["xi_norm"] = v;
    }
    j["wheight"] = r.wheight;
    j["i6"] = to_string(r.i6);
    j["j6"] = to_string(r.j6);
    j["aut"] = to_string(r.aut);
    j["aut_exact"] = to_string(r.aut_exact);
    j["abs"] = rats(r.abs_inv.i);
    return j;
}

DatasetRecord record_from_json(const nlohmann::json& j) {
    DatasetRecord r;
    const auto& cj = j.at("coeffs");
    if (!cj.is_array() || cj.size() != 8)
        throw std::runtime_error("field 'coeffs': expected 8 integers");
    for (int i = 0; i < 8; ++i) r.coeffs[i] = cj[i].get<std::int64_t>();
    r.naive_height = j.at("h").get<int>();
    const auto& xj = j.at("xi");
    if (!xj.is_array() || xj.size() != 6) throw std::runtime_error("field 'xi': expected 6 entries");
    for (int i = 0; i < 6; ++i) r.xi_raw[i] = parse_rat(xj[i].get<std::string>());
    const auto& nj = j.at("xi_norm");
    if (!nj.is_array() || nj.size() != 6)
        throw std::runtime_error("field 'xi_norm': expected 6 entries");
    for (int i = 0; i < 6; ++i) r.xi_norm.coords[i] = Int(nj[i].get<std::string>());
    r.wheight = j.at("wheight").get<double>();
    r.i6 = parse_rat(j.at("i6").get<std::string>());
    r.j6 = parse_rat(j.at("j6").get<std::string>());
    r.aut = label_from_string(j.at("aut").get<std::string>());
    r.aut_exact = j.contains("aut_exact")
                      ? label_from_string(j.at("aut_exact").get<std::string>())
                      : r.aut;
    const auto& aj = j.at("abs");
    if (!aj.is_array() || aj.size() != 5) throw std::runtime_error("field 'abs': expected 5 entries");
    for (int i = 0; i < 5; ++i) r.abs_inv.i[i] = parse_rat(aj[i].get<std::string>());
    return r;
}

}  // namespace

void write_jsonl(const std::vector<DatasetRecord>& records, std::ostream& out) {
    for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

void write_jsonl(const std::vector<DatasetRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_jsonl(records, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<DatasetRecord> read_jsonl(std::istream& in) {
    std::vector<DatasetRecord> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<DatasetRecord> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    try {
        return read_jsonl(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

namespace {

constexpr const char* kCsvHeader =
    "c0,c1,c2,c3,c4,c5,c6,c7,h,xi0,xi1,xi2,xi3,xi4,xi5,"
    "n0,n1,n2,n3,n4,n5,wheight,i6,j6,aut,aut_code,aut_exact\n";

void csv_row(std::ostream& out, const DatasetRecord& r) {
    for (int i = 0; i < 8; ++i) out << r.coeffs[i] << ',';
    out << r.naive_height << ',';
    for (int i = 0; i < 6; ++i) out << to_string(r.xi_raw[i]) << ',';
    for (int i = 0; i < 6; ++i) out << to_string(r.xi_norm.coords[i]) << ',';
    out << r.wheight << ',' << to_string(r.i6) << ',' << to_string(r.j6) << ','
        << to_string(r.aut) << ',' << numeric_code(r.aut) << ','
        << to_string(r.aut_exact) << '\n';
}

}  // namespace

void write_csv(const std::vector<DatasetRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << kCsvHeader;
    for (const auto& r : records) csv_row(out, r);
}

void convert_jsonl_to_csv(const std::string& jsonl_path, const std::string& csv_path) {
    std::ifstream in(jsonl_path);
    if (!in) throw std::runtime_error("cannot open for reading: " + jsonl_path);
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + csv_path);
    out << kCsvHeader;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            csv_row(out, record_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error(jsonl_path + ": line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
}

void DatasetStats::add(int h, AutLabel l) {
    auto& row = stratum[h];
    ++row[static_cast<int>(l)];
    ++total;
}

void DatasetStats::finalize() {
    cumulative.clear();
    std::array<std::uint64_t, 8> acc{};
    for (const auto& [h, row] : stratum) {
        for (int i = 0; i < 8; ++i) acc[i] += row[i];
        cumulative[h] = acc;
    }
}

std::string DatasetStats::render() const {
    static constexpr AutLabel order[] = {AutLabel::E,    AutLabel::C2_1, AutLabel::C2_2,
                                         AutLabel::C3,   AutLabel::V4_1, AutLabel::V4_2,
                                         AutLabel::A4,   AutLabel::D4};
    std::ostringstream os;
    os << "  h |       {e}    C2-1    C2-2      C3    V4-1    V4-2      A4      D4 |     Total\n";
    auto row_out = [&](const std::string& tag, const std::array<std::uint64_t, 8>& row) {
        os << (tag.size() < 3 ? std::string(3 - tag.size(), ' ') : "") << tag << " | ";
        std::uint64_t tot = 0;
        for (AutLabel l : order) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%9" PRIu64, row[static_cast<int>(l)]);
            os << buf;
            tot += row[static_cast<int>(l)];
        }
        char buf[16];
        std::snprintf(buf, sizeof buf, " | %9" PRIu64, tot);
        os << buf << '\n';
    };
    for (const auto& [h, row] : stratum) row_out(std::to_string(h), row);
    if (!cumulative.empty()) {
        const auto& last = cumulative.rbegin()->second;
        row_out("<=" + std::to_string(cumulative.rbegin()->first), last);
    }
    return os.str();
}

DatasetStats stats(const std::vector<DatasetRecord>& records) {
    DatasetStats s;
    for (const auto& r : records) s.add(r.naive_height, r.aut);
    s.finalize();
    return s;
}

namespace {

// Blocks are (c0, c1) prefixes in lexicographic order; a block's output is
// independent of the worker that produced it, so the merged stream is
// byte-identical for any worker count.
struct Block {
    std::int64_t c0, c1;
};

void run_block(const EnumerationConfig& cfg, const Block& b, std::ostream* out,
               DatasetStats& out_stats) {
    const int h = cfg.height_bound;
    Tuple c{};
    c[0] = b.c0;
    c[1] = b.c1;
    for (c[2] = -h; c[2] <= h; ++c[2])
     for (c[3] = -h; c[3] <= h; ++c[3])
      for (c[4] = -h; c[4] <= h; ++c[4])
       for (c[5] = -h; c[5] <= h; ++c[5])
        for (c[6] = -h; c[6] <= h; ++c[6])
         for (c[7] = -h; c[7] <= h; ++c[7]) {
             if (cfg.dedupe_antipodal && !first_nonzero_positive(c)) continue;
             if (block_zero(c, 0) || block_zero(c, 4)) continue;
             if (gcd_all(c) != 1) continue;
             if (i6_int(c) == 0) continue;
             DatasetRecord r = build_record(c);
             if (out) *out << record_to_json(r).dump() << '\n';
             out_stats.add(r.naive_height, r.aut);
         }
}

std::string block_path(const std::string& base, size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ".block%05zu", i);
    return base + buf;
}

}  // namespace

DatasetStats generate(const EnumerationConfig& cfg) {
    const int h = cfg.height_bound;
    const int workers = std::max(1, cfg.worker_count);
    std::vector<Block> blocks;
    for (std::int64_t c0 = -h; c0 <= h; ++c0)
        for (std::int64_t c1 = -h; c1 <= h; ++c1) blocks.push_back({c0, c1});

    const bool writing = !cfg.output_path.empty();
    std::vector<DatasetStats> parts(blocks.size());
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= blocks.size() || failed.load()) return;
            if (writing) {
                std::ofstream out(block_path(cfg.output_path, i));
                if (!out) {
                    failed.store(true);
                    return;
                }
                run_block(cfg, blocks[i], &out, parts[i]);
                if (!out) failed.store(true);
            } else {
                run_block(cfg, blocks[i], nullptr, parts[i]);
            }
        }
    };
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    DatasetStats total;
    for (const auto& p : parts)
        for (const auto& [hh, row] : p.stratum)
            for (int i = 0; i < 8; ++i) {
                total.stratum[hh][i] += row[i];
                total.total += row[i];
            }
    total.finalize();

    if (writing) {
        if (failed.load()) {
            for (size_t i = 0; i < blocks.size(); ++i)
                std::remove(block_path(cfg.output_path, i).c_str());
            throw std::runtime_error("worker write failed under: " + cfg.output_path);
        }
        // deterministic merge: concatenate the worker-private files in block
        // order, independent of which worker produced them
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + cfg.output_path);
        for (size_t i = 0; i < blocks.size(); ++i) {
            const std::string p = block_path(cfg.output_path, i);
            std::ifstream in(p, std::ios::binary);
            // streaming an empty file would set failbit on `out`
            if (in && in.peek() != std::char_traits<char>::eof()) out << in.rdbuf();
            in.close();
            std::remove(p.c_str());
        }
        if (!out) throw std::runtime_error("write failed: " + cfg.output_path);
    }
    return total;
}

}  // namespace ratcubic
