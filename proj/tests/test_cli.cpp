#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsk/cli.hpp"
#include "bsk/json_io.hpp"

using bsk::io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = bsk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
    Result r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("bsk_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    std::filesystem::path path_;
};

const char* descriptor_pm(int ks) {
    return ks ? R"({"k": 2, "form": {"k": 2, "matrix": [["1", "0"], ["0", "-1"]]}, "w2": "I", "ks": 1})"
              : R"({"k": 2, "form": {"k": 2, "matrix": [["1", "0"], ["0", "-1"]]}, "w2": "I", "ks": 0})";
}

} // namespace

TEST_CASE("homology --k 3") {
    json j = run_json({"homology", "--k", "3"});
    const char* expected[] = {"Z", "Z + Z/2", "0"};
    for (int d = 0; d <= 2; ++d) {
        const json& row = j["Z"][static_cast<std::size_t>(d)];
        CHECK(row["closed_form"]["text"] == expected[d]);
        CHECK(row["chain_complex"] == row["closed_form"]);
        CHECK(row["agree"] == true);
    }
    CHECK(j["Z2"][2]["chain_complex"]["text"] == "Z/2");
}

TEST_CASE("fox --k 2") {
    json j = run_json({"fox", "--k", "2"});
    CHECK(j["d_a"] == "1 - abA");
    std::string db = j["d_b"];
    CHECK(db == "a - abAB - abABB");
    CHECK(j["chain_condition"] == true);
    json w = run_json({"fox", "--k", "2", "--word", "abab"});
    CHECK(w["d_a"] == "1 + ab");
}

TEST_CASE("group and ring") {
    json g = run_json({"group", "--k", "3", "--word", "Aba"});
    CHECK(g["words"][0]["normal_form"] == "A*b*a");
    json r = run_json({"ring", "--k", "2", "--expr", "1 - b", "--times", "1 + b + b^2 + b^3"});
    CHECK(r["human"] == "1 - b^4");
    CHECK(r["augmentation"] == "0");
    CHECK(run({"ring", "--k", "2", "--expr", "1 + x"}).code == 2);
}

TEST_CASE("lgroups and bordism") {
    json l = run_json({"lgroups", "--k", "5"});
    CHECK(l["table"]["L5"]["text"] == "Z + Z/4");
    CHECK(l["assembly"]["properties_hold"] == true);
    CHECK(run_json({"bordism", "--k", "3", "--w2", "II"})["group"] == "8Z + Z/2");
    CHECK(run({"bordism", "--k", "3", "--w2", "I"}).code == 2);
    CHECK(run({"bordism", "--k", "3", "--w2", "V"}).code == 2);
}

TEST_CASE("classify, form and realize with files") {
    TempDir dir;
    std::string m0 = dir.write("m0.json", descriptor_pm(0));
    std::string m1 = dir.write("m1.json", descriptor_pm(1));
    std::string id = dir.write("u.json", R"({"k": 2, "matrix": [["1", "0"], ["0", "1"]]})");
    std::string swap = dir.write("swap.json", R"({"k": 2, "matrix": [["0", "1"], ["1", "0"]]})");

    CHECK(run_json({"classify", m0, m0, "--isometry", id})["verdict"] == "Homeomorphic");
    CHECK(run_json({"classify", m0, m1})["verdict"] == "NotHomeomorphic");
    CHECK(run_json({"classify", m0, m0})["verdict"] == "Unknown");
    CHECK(run_json({"classify", m0, m0, "--isometry", swap})["verdict"] == "Unknown");

    std::string bad_ks = dir.write("bad.json", R"({"k": 2, "form": {"k": 2, "matrix": [["0", "1"], ["1", "0"]]}, "w2": "II", "ks": 1})");
    Result inconsistent = run({"classify", m0, bad_ks});
    CHECK(inconsistent.code == 3);
    CHECK(inconsistent.err.find("inconsistent") != std::string::npos);

    std::string other_k = dir.write("k3.json", R"({"k": 3, "form": {"k": 3, "matrix": [["1"]]}, "w2": "I", "ks": 0})");
    CHECK(run({"classify", m0, other_k}).code == 2);
    CHECK(run({"classify", m0, dir.write("junk.json", "{not json")}).code == 2);
    CHECK(run({"classify", m0, (std::filesystem::path(m0).parent_path() / "missing.json").string()}).code == 2);

    std::string e8 = dir.write("e8.json", R"({"k": 3, "matrix": [
        ["2","-1","0","0","0","0","0","0"], ["-1","2","-1","0","0","0","0","0"],
        ["0","-1","2","-1","0","0","0","0"], ["0","0","-1","2","-1","0","0","0"],
        ["0","0","0","-1","2","-1","0","-1"], ["0","0","0","0","-1","2","-1","0"],
        ["0","0","0","0","0","-1","2","0"], ["0","0","0","0","-1","0","0","2"]],
        "arf": {"mode": "extended-from-Z", "value": 0}})");
    json f = run_json({"form", e8});
    CHECK(f["signature"] == 8);
    CHECK(f["parity"] == "even");
    CHECK(f["inverse_source"] == "found");
    json r = run_json({"realize", e8});
    CHECK(r["count"] == 2);
    CHECK(r["classes"][0]["w2"] == "II");
    CHECK(r["classes"][0]["ks"] == 1);
    CHECK(r["classes"][1]["w2"] == "III");
    CHECK(r["classes"][1]["ks"] == 1);
    CHECK(run({"realize", dir.write("two.json", R"({"k": 2, "matrix": [["2"]]})")}).code == 2);
    CHECK(run({"form", dir.write("nh.json", R"({"k": 2, "matrix": [["a"]]})")}).code == 2);
}

TEST_CASE("report ranges") {
    json two = run_json({"report", "--k-range", "2..3"});
    REQUIRE(two["rows"].size() == 2);
    CHECK(two["rows"][0]["k"] == 2);
    CHECK(two["rows"][0]["H1"] == "Z");
    CHECK(two["rows"][0]["L4"] == "Z");
    CHECK(two["rows"][0]["Omega4"] == "8Z");
    CHECK(two["rows"][1]["H1"] == "Z + Z/2");
    CHECK(two["rows"][1]["L4"] == "Z + Z/2");
    CHECK(two["rows"][1]["H2_Z2"] == "Z/2");
    CHECK(two["rows"][1]["oracle_check"] == "ok");
    json zero = run_json({"report", "--k-range", "0..0"});
    REQUIRE(zero["rows"].size() == 1);
    CHECK(zero["rows"][0]["H1"] == "Z");
    CHECK(zero["rows"][0]["L5"] == "Z");
    CHECK(run_json({"report", "--k-range", "3..2"})["rows"].empty());
    CHECK(run_json({"report", "--k-range", "-12..12"})["rows"].size() == 25);
    CHECK(run({"report", "--k-range", "1-2"}).code == 2);
    CHECK(run({"report", "--k-range", "0..100000"}).code == 2);
}

TEST_CASE("exit codes and usage") {
    Result unknown = run({"frobnicate"});
    CHECK(unknown.code == 64);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 64);
    CHECK(run({"homology"}).code == 64);
    CHECK(run({"homology", "--k", "x"}).code == 64);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("pretty output") {
    Result r = run({"--pretty", "report", "--k-range", "2..3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("oracle_check") != std::string::npos);
    Result h = run({"homology", "--k", "3", "--pretty"});
    CHECK(h.code == 0);
    CHECK(h.out.find("Z + Z/2") != std::string::npos);
}

TEST_CASE("determinism and round trip") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"report", "--k-range", "-3..3"}, {"fox", "--k", "-5"}, {"ring", "--k", "3", "--expr", "(1 - a)*(b + B)*a"}}) {
        Result a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(json::parse(a.out).dump(2) + "\n" == a.out);
    }
    json ring = run_json({"ring", "--k", "3", "--expr", "(1 - a)*(b + B)*a"});
    CHECK(bsk::io::ring_from_json(ring["element"]) == bsk::parse_ring("(1 - a)*(b + B)*a", bsk::GroupParam(3)));
}
