#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ratcubic/dataset.hpp"

using namespace ratcubic;

namespace {

std::vector<DatasetRecord> height1_records() {
    std::vector<DatasetRecord> out;
    EnumerationConfig cfg;
    cfg.height_bound = 1;
    enumerate_tuples(cfg, [&](const std::array<std::int64_t, 8>& c) {
        out.push_back(build_record(c));
    });
    return out;
}

}  // namespace

TEST_CASE("height-1 enumeration count and distribution") {
    const auto recs = height1_records();
    CHECK(recs.size() == 2248);
    const DatasetStats s = stats(recs);
    const auto& row = s.stratum.at(1);
    CHECK(row[static_cast<int>(AutLabel::E)] == 2223);
    CHECK(row[static_cast<int>(AutLabel::C2_1)] == 9);
    CHECK(row[static_cast<int>(AutLabel::C2_2)] == 8);
    CHECK(row[static_cast<int>(AutLabel::C3)] == 6);
    CHECK(row[static_cast<int>(AutLabel::V4_1)] == 0);
    CHECK(row[static_cast<int>(AutLabel::V4_2)] == 0);
    CHECK(row[static_cast<int>(AutLabel::A4)] == 0);
    CHECK(row[static_cast<int>(AutLabel::D4)] == 2);
}

TEST_CASE("enumerated tuples pass an independent filter recheck") {
    EnumerationConfig cfg;
    cfg.height_bound = 1;
    size_t n = 0;
    enumerate_tuples(cfg, [&](const std::array<std::int64_t, 8>& c) {
        ++n;
        std::int64_t g = 0;
        bool pos_seen = false, leading = true;
        for (auto v : c) {
            g = std::gcd(g, std::abs(v));
            if (leading && v != 0) {
                pos_seen = v > 0;
                leading = false;
            }
        }
        CHECK(g == 1);
        CHECK(pos_seen);
        const RationalMap3 m = RationalMap3::validated(
            {Rat(long(c[0])), Rat(long(c[1])), Rat(long(c[2])), Rat(long(c[3])),
             Rat(long(c[4])), Rat(long(c[5])), Rat(long(c[6])), Rat(long(c[7]))});
        CHECK(i6_resultant(m) != 0);
    });
    CHECK(n == 2248);
}

TEST_CASE("golden record fields") {
    const DatasetRecord r = build_record({2, 3, -1, -3, 1, 2, -3, 1});
    CHECK(r.naive_height == 3);
    CHECK(r.xi_raw == std::array<Rat, 6>{32, 12, Rat(27, 2), -164, -424, 2572});
    CHECK(r.j6 == 89360);
    CHECK(r.i6 == 211);
    CHECK(std::string(to_string(r.aut)) == "{e}");
    CHECK(r.aut_exact == AutLabel::E);
    CHECK(r.wheight == doctest::Approx(5.66).epsilon(0.001));
    CHECK(r.abs_inv.i[2] == Rat(Int("531441"), Int("712336")));
}

TEST_CASE("anchor records for the D4 and A4 tuples") {
    const DatasetRecord d4 = build_record({0, 0, 0, 1, 1, 0, 0, 0});
    CHECK(d4.aut == AutLabel::D4);
    CHECK(d4.xi_norm.coords == std::array<Int, 6>{0, -2, 0, 0, 0, 0});
    const DatasetRecord a4 = build_record({1, 0, 0, -3, 0, -3, 0, 0});
    CHECK(a4.aut == AutLabel::A4);
}

TEST_CASE("build_record rejects invalid tuples") {
    CHECK_THROWS_AS(build_record({1, 0, 0, 0, 1, 0, 0, 0}), NotARationalMap);
    CHECK_THROWS_AS(build_record({2, 0, 0, 0, 2, 0, 0, 2}), NotARationalMap);  // gcd 2
}

TEST_CASE("jsonl round trip is lossless") {
    const auto recs = height1_records();
    std::stringstream ss;
    write_jsonl(recs, ss);
    const auto back = read_jsonl(ss);
    REQUIRE(back.size() == recs.size());
    for (size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].coeffs == recs[i].coeffs);
        CHECK(back[i].xi_raw == recs[i].xi_raw);
        CHECK(back[i].xi_norm == recs[i].xi_norm);
        CHECK(back[i].i6 == recs[i].i6);
        CHECK(back[i].j6 == recs[i].j6);
        CHECK(back[i].aut == recs[i].aut);
        CHECK(back[i].abs_inv == recs[i].abs_inv);
    }
}

TEST_CASE("jsonl parse errors carry the line number and empty files are empty") {
    std::stringstream empty;
    CHECK(read_jsonl(empty).empty());
    std::stringstream bad("{\"coeffs\": [1,2,3]}\n");
    CHECK_THROWS_WITH_AS(read_jsonl(bad), doctest::Contains("line 1"), std::runtime_error);
}

TEST_CASE("a rational field like 531441/712336 survives the round trip") {
    const DatasetRecord r = build_record({2, 3, -1, -3, 1, 2, -3, 1});
    std::stringstream ss;
    write_jsonl({r}, ss);
    CHECK(ss.str().find("531441/712336") != std::string::npos);
    const auto back = read_jsonl(ss);
    CHECK(back.at(0).abs_inv.i[2] == Rat(Int("531441"), Int("712336")));
}

TEST_CASE("generate produces byte-identical output for any worker count") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ratcubic_test";
    fs::create_directories(dir);
    std::array<std::string, 3> blobs;
    int k = 0;
    for (int workers : {1, 2, 7}) {
        EnumerationConfig cfg;
        cfg.height_bound = 1;
        cfg.worker_count = workers;
        cfg.output_path = (dir / ("h1_w" + std::to_string(workers) + ".jsonl")).string();
        const DatasetStats s = generate(cfg);
        CHECK(s.total == 2248);
        std::ifstream in(cfg.output_path);
        std::stringstream ss;
        ss << in.rdbuf();
        blobs[k++] = ss.str();
    }
    CHECK(blobs[0] == blobs[1]);
    CHECK(blobs[0] == blobs[2]);
    fs::remove_all(dir);
}

TEST_CASE("stats renders one row per stratum plus a cumulative row") {
    const auto recs = height1_records();
    const DatasetStats s = stats(recs);
    const std::string table = s.render();
    CHECK(table.find("2223") != std::string::npos);
    CHECK(table.find("<=1") != std::string::npos);
}

TEST_CASE("dataset invariants on a sample: syzygy and J6 routes") {
    const auto recs = height1_records();
    for (size_t i = 0; i < recs.size(); i += 97) {
        const auto& r = recs[i];
        XiTuple x;
        x.xi = r.xi_raw;
        CHECK(syzygy_residual(x) == 0);
        RationalMap3::Coeffs c;
        for (int k = 0; k < 8; ++k) c[k] = Rat(long(r.coeffs[k]));
        const RationalMap3 m = RationalMap3::raw(c);
        CHECK(j6_resultant(m) == r.j6);
        CHECK(j6_explicit(m) == r.j6);
    }
}
