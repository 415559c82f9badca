#include <gtest/gtest.h>

#include "cli.hpp"
#include "cuspdens/constants.hpp"
#include "cuspdens/families.hpp"

using namespace cusp;
using cusp::cli::CommandResult;
using cusp::cli::Status;
using nlohmann::json;

namespace {

CommandResult run(std::vector<std::string> args) { return cli::dispatch(args); }

std::string data(const char* name) { return std::string(CUSPDENS_TEST_DATA) + "/" + name; }

json rendered(const CommandResult& r) { return json::parse(r.render()); }

}  // namespace

TEST(Cli, Constants) {
  const CommandResult r = run({"constants"});
  ASSERT_EQ(r.status, Status::ok);
  EXPECT_EQ(r.exit_code(), 0);
  const json doc = rendered(r);
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_NEAR(doc["payload"]["v_tet"].get<double>(), bounds().v_tet, 1e-11);
  // unrounded payload carries the library value itself
  EXPECT_EQ((*r.payload)["dcc_upper"].get<double>(), bounds().dcc_upper);
}

TEST(Cli, DigitsFlag) {
  const json doc = rendered(run({"--digits", "4", "constants"}));
  EXPECT_EQ(doc["payload"]["v_oct"].get<double>(), 3.664);
  EXPECT_EQ(run({"--digits", "40", "constants"}).status, Status::validation_error);
}

TEST(Cli, CycleExitCode) {
  const CommandResult r = run({"chain", "fill", "--graph", data("cyclic.json")});
  EXPECT_EQ(r.status, Status::cycle_error);
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_FALSE(r.payload.has_value());
  const CommandResult c = run({"chain", "check", "--graph", data("cyclic.json")});
  ASSERT_EQ(c.status, Status::ok);
  EXPECT_FALSE((*c.payload)["acyclic"].get<bool>());
  EXPECT_EQ((*c.payload)["cycle"].size(), 3u);
}

TEST(Cli, ChainFill) {
  const CommandResult r = run({"chain", "fill", "--graph", data("edge.json")});
  ASSERT_EQ(r.status, Status::ok);
  const json& steps = (*r.payload)["steps"];
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0]["component"], "A1");
  EXPECT_EQ(steps[0]["twists"], 3);
  EXPECT_EQ(steps[0]["strands"], 2);
  EXPECT_EQ(steps[1]["twists"], 8);
  EXPECT_TRUE(steps[1]["strands"].is_null());
  const CommandResult h = run({"chain", "fill", "--graph", data("star.json"), "--order", "highest"});
  EXPECT_EQ((*h.payload)["residual_coefficients"]["A0"], 10);
}

TEST(Cli, FamilyIntervals) {
  const CommandResult r = run({"family", "intervals"});
  ASSERT_EQ(r.status, Status::ok);
  const auto lib = interval_endpoints();
  ASSERT_EQ(r.payload->size(), lib.size());
  for (std::size_t i = 0; i < lib.size(); ++i) {
    EXPECT_EQ((*r.payload)[i]["name"], lib[i].name);
    EXPECT_EQ((*r.payload)[i]["upper"].get<double>(), lib[i].upper);
    EXPECT_EQ((*r.payload)[i]["citation"], lib[i].citation);
  }
  EXPECT_EQ(r.provenance.size(), 4u);
}

TEST(Cli, DensityCarriesProvenance) {
  const CommandResult r = run({"density", "max_twisted_four_chain", "--subset", "0,1"});
  ASSERT_EQ(r.status, Status::ok);
  EXPECT_NEAR((*r.payload)["value"].get<double>(), 0.682620870651264644, 1e-14);
  EXPECT_EQ((*r.payload)["kind"], "cdr");
  EXPECT_FALSE(r.provenance.empty());
  const CommandResult reported = run({"density", "W10_11_augmented", "--kind", "dcc"});
  ASSERT_EQ(reported.status, Status::ok);
  EXPECT_EQ((*reported.payload)["value"].get<double>(), 1.6923);
  EXPECT_EQ(run({"density", "max_twisted_four_chain", "--kind", "dcc"}).status,
            Status::validation_error);
  EXPECT_EQ(run({"density", "no_such_link"}).status, Status::validation_error);
}

TEST(Cli, DensityFromFile) {
  const CommandResult r = run({"density", data("knot.json"), "--kind", "dvol"});
  ASSERT_EQ(r.status, Status::ok);
  EXPECT_NEAR((*r.payload)["value"].get<double>(), bounds().v_tet / 2, 1e-15);
}

TEST(Cli, BeltSum) {
  const CommandResult c = run({"beltsum", "combine", "--a", "F2_limit", "--b", "borromean_limit",
                               "--k", "3", "--p", "2"});
  ASSERT_EQ(c.status, Status::ok);
  EXPECT_EQ((*c.payload)["k"], 3);
  const CommandResult s = run({"beltsum", "sample", "--a", "F2_limit", "--b", data("tangle.json"),
                               "--target", "0.55", "--eps", "1e-7"});
  ASSERT_EQ(s.status, Status::ok) << s.render();
  EXPECT_EQ(((*s.payload)["k"].get<long long>() + (*s.payload)["p"].get<long long>()) % 2, 1);
  const CommandResult bad = run({"beltsum", "sample", "--a", "F2_limit", "--b", "borromean_limit",
                                 "--target", "0.9"});
  EXPECT_EQ(bad.status, Status::range_error);
  EXPECT_EQ(bad.exit_code(), 1);
}

TEST(Cli, Families) {
  const CommandResult oct = run({"family", "eval", "--family", "octahedral", "--params", "1000,1000"});
  ASSERT_EQ(oct.status, Status::ok);
  EXPECT_EQ((*oct.payload)["dcc"].get<double>(), octahedral_link(1000, 1000, false).dcc);
  const CommandResult cov = run({"family", "eval", "--family", "cover_twist", "--params", "3,5",
                                 "--seed", data("seed_w.json")});
  ASSERT_EQ(cov.status, Status::ok);
  EXPECT_EQ((*cov.payload)["crossing_number"], 3 * 26 + 4 + 10);
  const CommandResult even = run({"family", "eval", "--family", "cover_twist", "--params", "4,5",
                                  "--seed", "L_7_8_augmented"});
  EXPECT_EQ(even.status, Status::domain_error);
  const CommandResult sample = run({"family", "sample", "--family", "cover_twist", "--seed",
                                    "L_7_8_augmented", "--target", "2.0", "--eps", "1e-4"});
  ASSERT_EQ(sample.status, Status::ok);
  EXPECT_NEAR((*sample.payload)["dcc"].get<double>(), 2.0, 1e-4);
  EXPECT_EQ(run({"family", "eval", "--family", "twist", "--params", "1,2"}).status,
            Status::validation_error);
}

TEST(Cli, Horoball) {
  const CommandResult p = run({"horoball", "pack", "--config", "edge"});
  ASSERT_EQ(p.status, Status::ok);
  EXPECT_NEAR((*p.payload)["total"].get<double>(), 3.0, 1e-12);
  EXPECT_NEAR((*p.payload)["vertex_volumes"]["inf"].get<double>(), 2.0, 1e-12);
  const CommandResult f = run({"horoball", "pack", "--config", data("edge_config.json")});
  EXPECT_EQ((*f.payload)["total"], (*p.payload)["total"]);
  const CommandResult s = run({"horoball", "search", "--seed", "4", "--iters", "2000"});
  ASSERT_EQ(s.status, Status::ok);
  EXPECT_LE((*s.payload)["best_total"].get<double>(), 3.0 + 1e-6);
  const CommandResult k = run({"horoball", "pokes", "--ball", "0.9,0,0.4", "--plane", "hemisphere,0,0,1"});
  ASSERT_EQ(k.status, Status::ok);
  EXPECT_TRUE((*k.payload)["pokes"].get<bool>());
  EXPECT_EQ(run({"horoball", "pokes", "--ball", "1,2", "--plane", "hemisphere,0,0,1"}).status,
            Status::validation_error);
}

TEST(Cli, UnknownSubcommand) {
  const CommandResult r = run({"frobnicate"});
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_NE(r.render().find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).exit_code(), 1);
}

TEST(Cli, Help) {
  const CommandResult r = run({"--help"});
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_NE(r.render().find("horoball"), std::string::npos);
}

TEST(Cli, ByteStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"horoball", "search", "--seed", "3", "--iters", "1500"},
        std::vector<std::string>{"family", "intervals"}, std::vector<std::string>{"constants"}}) {
    EXPECT_EQ(run(args).render(), run(args).render());
  }
}

TEST(Cli, StatusOkIffPayload) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"constants"}, std::vector<std::string>{"density", "nope"},
        std::vector<std::string>{"chain", "fill", "--graph", data("cyclic.json")},
        std::vector<std::string>{"family", "intervals"}}) {
    const CommandResult r = run(args);
    EXPECT_EQ(r.status == Status::ok, r.payload.has_value());
  }
}

TEST(Cli, RoundNumbers) {
  const json in = {{"a", 1.23456789}, {"b", {2.0000000001, 3}}, {"c", "x"}};
  const json out = cli::round_numbers(in, 3);
  EXPECT_EQ(out["a"].get<double>(), 1.23);
  EXPECT_EQ(out["b"][0].get<double>(), 2.0);
  EXPECT_EQ(out["b"][1], 3);
  EXPECT_EQ(out["c"], "x");
}

TEST(Cli, RegistryOverride) {
  EXPECT_EQ(run({"--registry", "/nonexistent.json", "density", "figure_eight"}).status,
            Status::validation_error);
}
