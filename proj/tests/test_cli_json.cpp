// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// The CLI is exercised in process: run() takes explicit streams, so every
// test is a pure function of argv and stdin.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "moments/cli.hpp"

using moments::Json;
using moments::Rational;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  CliResult r;
  r.code = moments::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("seq gen emits one canonical JSON line") {
  CliResult r = run_cli({"seq", "gen", "--name", "catalan", "--len", "8"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "{\"label\":\"catalan\",\"values\":[\"1\",\"1\",\"2\",\"5\",\"14\",\"42\","
        "\"132\",\"429\"],\"support\":{\"c\":\"2\",\"v\":\"2\",\"w\":1}}\n");

  // Byte-identical across runs.
  CHECK(run_cli({"seq", "gen", "--name", "catalan", "--len", "8"}).out == r.out);

  CliResult plain = run_cli({"seq", "gen", "--name", "catalan", "--len", "8", "--plain"});
  CHECK(plain.out == "1\n1\n2\n5\n14\n42\n132\n429\n");

  CliResult geo = run_cli({"seq", "gen", "--name", "geometric(5/2)", "--len", "4"});
  CHECK(geo.code == 0);
  CHECK(geo.out ==
        "{\"label\":\"geometric(5/2)\",\"values\":[\"1\",\"5/2\",\"25/4\",\"125/8\"],"
        "\"support\":{\"c\":\"5/2\",\"v\":\"0\",\"w\":0}}\n");
}

TEST_CASE("seq read accepts stdin, inline lists, shorthand, JSON, and files") {
  CliResult stdin_plain = run_cli({"seq", "read"}, "1\n2\n4\n");
  CHECK(stdin_plain.code == 0);
  CHECK(stdin_plain.out == "{\"label\":\"\",\"values\":[\"1\",\"2\",\"4\"],\"support\":null}\n");

  // "-" is an explicit stdin marker.
  CHECK(run_cli({"seq", "read", "--seq", "-"}, "5\n6\n").out ==
        "{\"label\":\"\",\"values\":[\"5\",\"6\"],\"support\":null}\n");

  CliResult inline_list = run_cli({"seq", "read", "--seq", "1,3/2,9/4"});
  CHECK(Json::parse(inline_list.out)["values"] == Json({"1", "3/2", "9/4"}));

  CliResult shorthand = run_cli({"seq", "read", "--seq", "@catalan:5", "--plain"});
  CHECK(shorthand.out == "1\n1\n2\n5\n14\n");

  // Inline JSON: integers are accepted and unknown fields are ignored.
  CliResult inline_json =
      run_cli({"seq", "read", "--seq", R"({"values":[1,"3/2"],"comment":"ignored"})"});
  CHECK(inline_json.code == 0);
  CHECK(Json::parse(inline_json.out)["values"] == Json({"1", "3/2"}));

  auto path = std::filesystem::temp_directory_path() / "moments_cli_test_seq.txt";
  std::ofstream(path) << "1\n3/2\n9/4\n";
  CliResult from_file = run_cli({"seq", "read", "--seq", path.string(), "--plain"});
  CHECK(from_file.out == "1\n3/2\n9/4\n");
  std::filesystem::remove(path);

  CHECK(run_cli({"seq", "frobnicate"}).code == 2);
}

TEST_CASE("poly commands parse, symmetrize, and print canonically") {
  CHECK(run_cli({"poly", "print", "--poly", "y^2 - x*y"}).out == "-x1*x2+x2^2\n");
  CHECK(run_cli({"poly", "symmetrize", "--poly", "y^2 - x*y", "--plain"}).out ==
        "1/2*x1^2-x1*x2+1/2*x2^2\n");
  CHECK(run_cli({"poly", "parse", "--poly", "x + y"}).out ==
        "{\"num_vars\":2,\"terms\":[{\"exp\":[1,0],\"coef\":\"1\"},"
        "{\"exp\":[0,1],\"coef\":\"1\"}]}\n");

  // Variable count inference: aliases y/z, indexed names, stdin input.
  CHECK(run_cli({"poly", "print", "--poly", "z^2"}).out == "x3^2\n");
  CHECK(run_cli({"poly", "print", "--poly", "x2 + x5"}).out == "x2+x5\n");
  CHECK(run_cli({"poly", "print"}, "x^2 - 1\n").out == "x1^2-1\n");
  CHECK(run_cli({"poly", "print", "--poly", "7"}).code == 2);  // nothing to infer
  CHECK(run_cli({"poly", "print", "--poly", "7", "--num-vars", "2"}).out == "7\n");

  // JSON polynomial input round-trips through the printer.
  CHECK(run_cli({"poly", "print", "--poly",
                 R"({"num_vars":1,"terms":[{"exp":[2],"coef":"1/2"}]})"})
            .out == "1/2*x1^2\n");
}

TEST_CASE("sequence output pipes back in as sequence input") {
  CliResult minor = run_cli({"transform", "minor", "--seq", "@catalan:20", "--r", "1,2",
                             "--t", "1,2"});
  REQUIRE(minor.code == 0);
  Json j = Json::parse(minor.out);
  CHECK(j["label"] == "minor(catalan)");
  CHECK(j["operator"] == "minor");
  CHECK(j["spec"]["r"] == Json({1, 2}));
  CHECK(j["spec"]["t"] == Json({1, 2}));
  CHECK(j["values"].size() == 16);
  CHECK(j["values"][0] == "1");
  CHECK(j["values"][1] == "1");
  CHECK(j["values"][2] == "4");
  CHECK(j["values"][3] == "30");
  CHECK(j["values"][4] == "330");

  // Two runs are byte-identical; the JSON line feeds verify unchanged.
  CHECK(run_cli({"transform", "minor", "--seq", "@catalan:20", "--r", "1,2", "--t", "1,2"})
            .out == minor.out);
  CliResult verified = run_cli({"verify", "stieltjes", "--depth", "3"}, minor.out);
  CHECK(verified.code == 0);
  CHECK(verified.out ==
        "{\"verdict\":\"pass\",\"criterion\":\"stieltjes\",\"depth\":3,\"witness\":null}\n");
}

TEST_CASE("verify reports witnesses with exact values and exit code 1") {
  CliResult fail = run_cli({"verify", "stieltjes", "--seq", "1,2,1,2", "--depth", "1"});
  CHECK(fail.code == 1);
  CHECK(fail.out ==
        "{\"verdict\":\"fail\",\"criterion\":\"stieltjes\",\"depth\":1,"
        "\"witness\":{\"m\":1,\"detail\":\"H_1(alpha) has (-1)^k c_k < 0 at k=2\","
        "\"value\":\"-3\"}}\n");

  CliResult plain =
      run_cli({"verify", "stieltjes", "--seq", "1,2,1,2", "--depth", "1", "--plain"});
  CHECK(plain.code == 1);
  CHECK(plain.out ==
        "verdict: fail\ncriterion: stieltjes\ndepth: 1\n"
        "witness: m=1 value=-3 detail=H_1(alpha) has (-1)^k c_k < 0 at k=2\n");

  CliResult pass = run_cli({"verify", "hamburger", "--seq", "@catalan:16"});
  CHECK(pass.code == 0);  // default depth is the maximum the length allows
  CHECK(pass.out ==
        "{\"verdict\":\"pass\",\"criterion\":\"hamburger\",\"depth\":7,\"witness\":null}\n");

  CliResult interval = run_cli(
      {"verify", "interval", "--seq", "@geometric(5):8", "--interval", "0,4", "--depth", "0"});
  CHECK(interval.code == 1);
  CHECK(interval.out ==
        "{\"verdict\":\"fail\",\"criterion\":\"interval\",\"depth\":0,"
        "\"witness\":{\"m\":0,\"detail\":\"H_0(beta) has (-1)^k c_k < 0 at k=1\","
        "\"value\":\"-5\"}}\n");

  CliResult totalnn = run_cli({"verify", "totalnn", "--seq", "1,2,1", "--depth", "1"});
  CHECK(totalnn.code == 1);
  CHECK(totalnn.out ==
        "{\"verdict\":\"fail\",\"criterion\":\"total_nonneg\",\"depth\":1,"
        "\"witness\":{\"m\":1,\"detail\":\"minor rows={0,1} cols={0,1} of H_1(alpha)\","
        "\"value\":\"-3\"}}\n");

  // Depth beyond what the prefix supports is an input error, not a verdict.
  CHECK(run_cli({"verify", "stieltjes", "--seq", "1,2,1,2", "--depth", "5"}).code == 2);
}

TEST_CASE("interval map squares surd and rational intervals") {
  CliResult surd = run_cli({"interval", "map", "--interval", "3,2,2", "--d", "2"});
  CHECK(surd.code == 0);
  CHECK(surd.out == "{\"c\":\"17\",\"v\":\"12\",\"w\":2}\n");
  CHECK(run_cli({"interval", "map", "--interval", "3,2,2", "--d", "2", "--plain"}).out ==
        "[17 - 12*sqrt(2), 17 + 12*sqrt(2)]\n");

  CliResult rational = run_cli({"interval", "map", "--interval", "1,3", "--d", "2"});
  CHECK(rational.out == "{\"c\":\"5\",\"v\":\"4\",\"w\":1}\n");
  CHECK(run_cli({"interval", "map", "--interval", "1,3", "--d", "2", "--plain"}).out ==
        "[1, 9]\n");

  CHECK(run_cli({"interval", "map", "--interval", "1,2,3,4", "--d", "2"}).code == 2);
  CHECK(run_cli({"interval", "squeeze"}).code == 2);
}

TEST_CASE("transform subcommands label their provenance") {
  CliResult applied =
      run_cli({"transform", "apply", "--poly", "1/2*(x-y)^2", "--seq", "@catalan:10"});
  REQUIRE(applied.code == 0);
  Json j = Json::parse(applied.out);
  CHECK(j["label"] == "T_p(catalan)");
  CHECK(j["operator"] == "T_p");
  CHECK(j["poly"]["num_vars"] == 2);
  CHECK(j["values"] == Json({"1", "1", "3", "14", "84", "594", "4719", "40898"}));

  CliResult copos = run_cli({"transform", "coposform", "--matrix", "1/2,-1/2;-1/2,1/2",
                             "--seq", "@catalan:16"});
  REQUIRE(copos.code == 0);
  Json c = Json::parse(copos.out);
  CHECK(c["label"] == "copositive_form(catalan)");
  CHECK(c["operator"] == "copositive_form");
  CHECK(c["spec"]["matrix"] ==
        Json::array({Json::array({"1/2", "-1/2"}), Json::array({"-1/2", "1/2"})}));
  CHECK(c["values"].size() == 14);
  for (int i = 0; i < 5; ++i)  // same transform as 1/2*(x-y)^2
    CHECK(c["values"][i] == Json::parse(applied.out)["values"][i]);

  CliResult witness =
      run_cli({"transform", "witness", "--poly", "x - 3", "--xi", "2", "--len", "4"});
  CHECK(witness.code == 1);  // negative value doubles as the exit signal
  CHECK(witness.out ==
        "{\"xi\":\"2\",\"value\":\"-1\",\"prefix\":{\"label\":\"dirac(2)\","
        "\"values\":[\"1\",\"2\",\"4\",\"8\"],\"support\":{\"c\":\"2\",\"v\":\"0\","
        "\"w\":0}}}\n");
  CHECK(run_cli({"transform", "witness", "--poly", "(x-1)^2", "--xi", "3", "--len", "3"})
            .code == 0);
}

TEST_CASE("positivity check reports verdicts without the route field in JSON") {
  CliResult pass = run_cli({"positivity", "check", "--poly", "y^2 - x*y"});
  CHECK(pass.code == 0);
  CHECK(pass.out ==
        "{\"kind\":\"no_counterexample\",\"point\":null,\"value\":null,"
        "\"resolution\":33,\"samples\":33}\n");
  Json j = Json::parse(pass.out);
  CHECK_FALSE(j.contains("route"));
  CHECK_FALSE(j.contains("min_sampled"));

  CliResult plain = run_cli({"positivity", "check", "--poly", "y^2 - x*y", "--plain"});
  CHECK(plain.out ==
        "kind: no_counterexample\nmin_sampled: 0\nmin_point: 1 1\n"
        "resolution: 33\nsamples: 33\nroute: simplex_slice\n");

  CliResult fail = run_cli({"positivity", "check", "--poly", "x^2 - 3", "--domain", "reals"});
  CHECK(fail.code == 1);
  CHECK(fail.out ==
        "{\"kind\":\"counterexample\",\"point\":[\"-20/13\"],\"value\":\"-107/169\","
        "\"resolution\":33,\"samples\":7}\n");

  // Thread count must not change a byte.
  CHECK(run_cli({"positivity", "check", "--poly", "x^2 - 3", "--domain", "reals",
                 "--threads", "4"})
            .out == fail.out);

  CliResult exhausted =
      run_cli({"positivity", "check", "--poly", "x^2 - 3", "--budget", "0"});
  CHECK(exhausted.code == 2);
  CHECK(exhausted.err.find("budget exceeded") != std::string::npos);
}

TEST_CASE("positivity comparemin needs a box and reports both minima") {
  CliResult r = run_cli({"positivity", "comparemin", "--poly", "3*x^2 - y^2", "--domain",
                         "box:-1,1", "--resolution", "21"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"min_p\":\"-1\",\"min_p_point\":[\"0\",\"-1\"],\"min_pbar\":\"0\","
        "\"min_pbar_point\":[\"0\",\"0\"],\"resolution\":21,\"samples\":441}\n");

  CliResult plain = run_cli({"positivity", "comparemin", "--poly", "3*x^2 - y^2",
                             "--domain", "box:-1,1", "--resolution", "21", "--plain"});
  CHECK(plain.out ==
        "min_p: -1 at: 0 -1\nmin_pbar: 0 at: 0 0\nresolution: 21\nsamples: 441\n");

  CHECK(run_cli({"positivity", "comparemin", "--poly", "3*x^2 - y^2"}).code == 2);
  CHECK(run_cli({"positivity", "check", "--poly", "x + y", "--domain", "box:2,1"}).code == 2);
}

TEST_CASE("decimal flag adds sibling approximation fields") {
  CliResult geo =
      run_cli({"seq", "gen", "--name", "geometric(1/3)", "--len", "3", "--decimal", "4"});
  CHECK(geo.out ==
        "{\"label\":\"geometric(1/3)\",\"values\":[\"1\",\"1/3\",\"1/9\"],"
        "\"values_decimal_approx\":[\"1.0000\",\"0.3333\",\"0.1111\"],"
        "\"support\":{\"c\":\"1/3\",\"c_decimal_approx\":\"0.3333\",\"v\":\"0\","
        "\"v_decimal_approx\":\"0.0000\",\"w\":0}}\n");

  CliResult fail_dec = run_cli({"verify", "stieltjes", "--seq", "1,2,1,2", "--depth", "1",
                            "--decimal", "2"});
  Json j = Json::parse(fail_dec.out);
  CHECK(j["witness"]["value_decimal_approx"] == "-3.00");

  // Plain output ignores the flag entirely.
  CHECK(run_cli({"seq", "gen", "--name", "catalan", "--len", "3", "--plain", "--decimal",
                 "4"})
            .out == "1\n1\n2\n");
}

TEST_CASE("usage and input errors exit with code 2 and a diagnostic") {
  CliResult none = run_cli({});
  CHECK(none.code == 2);
  CHECK(none.err.find("usage: moments") != std::string::npos);

  CliResult unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown command") != std::string::npos);

  CliResult badflag = run_cli({"seq", "gen", "--nope", "3"});
  CHECK(badflag.code == 2);
  CHECK(badflag.err.find("unknown flag --nope") != std::string::npos);

  CliResult missing = run_cli({"seq", "gen", "--name", "catalan"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("missing required flag --len") != std::string::npos);

  CliResult dangling = run_cli({"seq", "gen", "--name"});
  CHECK(dangling.code == 2);
  CHECK(dangling.err.find("needs a value") != std::string::npos);

  CliResult badjson = run_cli({"seq", "read", "--seq", "{\"values\":[}"});
  CHECK(badjson.code == 2);
  CHECK(badjson.err.find("malformed JSON input") != std::string::npos);

  CliResult badrational = run_cli({"seq", "read", "--seq", "1,oops,3"});
  CHECK(badrational.code == 2);
  CHECK(badrational.err.rfind("error:", 0) == 0);

  CHECK(run_cli({"seq", "gen", "--name", "catalan", "--len", "8", "--plain=yes"}).code == 2);
  CHECK(run_cli({"seq", "gen", "--name", "catalan", "--len", "abc"}).code == 2);
  CHECK(run_cli({"seq", "gen", "--name", "no_such_family", "--len", "4"}).code == 2);
  CHECK(run_cli({"seq", "read", "--seq", "@catalan"}).code == 2);  // missing :len
  CHECK(run_cli({"positivity", "check", "--poly", "x", "--domain", "torus"}).code == 2);
}
