#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <ribbonfold/cli.hpp>

using namespace ribbonfold;

namespace {

RunConfig params(int p, int q, int r, int s) {
    RunConfig cfg;
    cfg.p = p; cfg.q = q; cfg.r = r; cfg.s = s;
    return cfg;
}

} // namespace

TEST_CASE("cmd_bound") {
    CmdResult res = cmd_bound(params(3, 2, 4, 2));
    CHECK(res.exit_code == kOk);
    json out = json::parse(res.output);
    CHECK(out["rib_upper_bound"] == 24);
    CHECK(out["case"] == "EXTENDED");

    res = cmd_bound(params(5, 2, 3, 1));
    out = json::parse(res.output);
    CHECK(out["rib_upper_bound"] == 10);
    CHECK(out["case"] == "REDUCED");

    CHECK(cmd_bound(params(4, 2, 2, 1)).exit_code == kLinkInput);
    CHECK(cmd_bound(params(3, 2, 2, 0)).exit_code == kInvalidInput);
    CHECK(cmd_bound(params(3, 1, 2, 1)).exit_code == kInvalidInput);

    RunConfig text = params(3, 2, 4, 2);
    text.format = "text";
    CHECK(cmd_bound(text).output.find("ribbonlength <= 24") != std::string::npos);
}

TEST_CASE("cmd_plan") {
    CmdResult res = cmd_plan(params(3, 2, 2, 1));
    REQUIRE(res.exit_code == kOk);
    json out = json::parse(res.output);
    CHECK(out["length_over_w"] == 10);
    REQUIRE(out["bands"].size() == 4);
    CHECK(out["bands"][0]["weight"] == 1);
    CHECK(out["bands"][0]["fold"] == "T1");
    CHECK(out["bands"][1]["weight"] == 2);
    CHECK(out["bands"][1]["fold"] == "T3");
    CHECK(out["bands"][2]["weight"] == 2);
    CHECK(out["bands"][2]["fold"] == "T4");
    CHECK(out["bands"][2]["box"] == 1);
    CHECK(out["bands"][3]["fold"] == "DIRECT");

    res = cmd_plan(params(5, 2, 3, 2));
    out = json::parse(res.output);
    bool combined = false;
    for (auto& b : out["bands"])
        if (b["fold"] == "T3T4_COMBINED") combined = true;
    CHECK(combined);

    // the r = 1 construction still spends 2w|s| on the twist band: framing is
    // kept even though the knot type matches the plain torus knot
    res = cmd_plan(params(3, 2, 1, 7));
    out = json::parse(res.output);
    CHECK(out["case"] == "REDUCED");
    CHECK(out["length_over_w"] == 18); // 2(p + (|s|-1) r)

    RunConfig half = params(3, 2, 2, 1);
    half.width = Rational(1, 2);
    out = json::parse(cmd_plan(half).output);
    CHECK(out["length_over_w"] == 10);
    CHECK(out["total_length"] == "5");
}

TEST_CASE("cmd_render") {
    RunConfig cfg = params(3, 2, 2, 1);
    CmdResult res = cmd_render(cfg);
    CHECK(res.exit_code == kOk);
    CHECK(res.svg.find("<svg") == 0);
    json out = json::parse(res.output);
    CHECK(out["fold_lines_disjoint"] == true);
    CHECK(out["crossings_consistent"] == true);
    CHECK(out["length_matches"] == true);
    CHECK(out["measured_length_over_w"] == "10");

    CmdResult again = cmd_render(cfg);
    CHECK(again.svg == res.svg); // byte-identical
    CHECK(again.output == res.output);

    CmdResult bad = cmd_render(params(3, 2, 9, 1));
    CHECK(bad.exit_code == kInvalidInput);
    CHECK(bad.svg.empty());
}

TEST_CASE("cmd_verify") {
    CmdResult res = cmd_verify(params(3, 2, 2, 1));
    CHECK(res.exit_code == kOk);
    json out = json::parse(res.output);
    CHECK(out["identity_check"] == true);
    CHECK(out["invariant_check"]["pq_symmetry"] == true);
    CHECK(out["invariant_check"]["route_agreement"] == true);
    CHECK(out["plan_length_check"] == true);

    // serialized braid word and alexander polynomial ride along
    CHECK(out["braid"]["strands"] == 3);
    CHECK(out["braid"]["word"] == json::array({1, 2, 1, 2, 1, 1}));
    CHECK(out["alexander"]["terms"].is_array());
    json terms = out["alexander"]["terms"];
    for (size_t i = 1; i < terms.size(); ++i)
        CHECK(terms[i][0].get<int>() > terms[i - 1][0].get<int>()); // ascending exponents

    CHECK(cmd_verify(params(5, 3, 2, 1)).exit_code == kOk);

    res = cmd_verify(params(2, 3, 2, 1)); // swap applied first
    CHECK(res.exit_code == kOk);
    out = json::parse(res.output);
    CHECK(out["invariant_check"]["pq_symmetry"] == true);

    // q = 1 is uncertifiable: identity and symmetry checks are not applicable
    RunConfig loose = params(4, 1, 2, 2);
    loose.permissive = true;
    res = cmd_verify(loose);
    CHECK(res.exit_code == kOk);
    out = json::parse(res.output);
    CHECK(out["identity_check"].is_null());
    CHECK(out["invariant_check"]["pq_symmetry"].is_null());
    CHECK(out["invariant_check"]["route_agreement"] == true);
}

TEST_CASE("verify passes across a sampled grid") {
    for (int p = 3; p <= 5; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int r = 1; r < p + q; ++r)
                for (int s : {1, -2}) {
                    CmdResult res = cmd_verify(params(p, q, r, s));
                    INFO("p=" << p << " q=" << q << " r=" << r << " s=" << s << "\n"
                              << res.output);
                    CHECK(res.exit_code == kOk);
                }
        }
}

TEST_CASE("cmd_sweep") {
    RunConfig cfg;
    cfg.range_p = {{3, 5}};
    cfg.range_q = {{2, 3}};
    cfg.range_r = {{1, 4}};
    cfg.range_s = {{1, 2}};
    CmdResult res = cmd_sweep(cfg);
    REQUIRE(res.exit_code == kOk);
    json arr = json::parse(res.output);
    REQUIRE(arr.is_array());
    bool found = false;
    for (auto& e : arr) {
        if (e.contains("skipped")) {
            CHECK(e["input"].contains("p"));
            continue;
        }
        // every kept entry is a knot
        CHECK(e.contains("rib_upper_bound"));
        if (e["params"] == json{{"p", 5}, {"q", 2}, {"r", 3}, {"s", 1}}) {
            found = true;
            CHECK(e["case"] == "REDUCED");
            CHECK(e["rib_upper_bound"] == 10);
        }
    }
    CHECK(found);
    // non-coprime inputs are skipped with a reason
    bool skipped42 = false;
    for (auto& e : arr)
        if (e.contains("skipped") && e["input"]["p"] == 4 && e["input"]["q"] == 2) skipped42 = true;
    CHECK(skipped42);

    CHECK(cmd_sweep(cfg).output == res.output); // determinism

    RunConfig empty;
    CHECK(cmd_sweep(empty).exit_code == kInvalidInput);
    empty = cfg;
    empty.range_p = {{5, 3}};
    CHECK(cmd_sweep(empty).exit_code == kInvalidInput);
}
