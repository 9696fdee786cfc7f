#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "wittlab/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "wittlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = wittlab::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& input = "")
{
    const auto r = run(std::move(args), input);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("witt subcommands")
{
    CHECK(run({"witt", "ghost"}, R"({"x":{"ring":"Z","truncation":[1,2],"coords":["3","0"]}})").out ==
          "{\"components\":[\"3\",\"9\"]}\n");
    auto j = run_json({"witt", "add", "--ring", "Z", "--modulus", "2"}, R"({"x":{"coords":["1","0"]},"y":{"coords":["1","0"]}})");
    CHECK(j["coords"] == json::array({"2", "-1"}));
    for (const char* route : {"series", "universal", "ghost-lift"})
        CHECK(run_json({"witt", "mul", "--route", route},
                       R"({"x":{"ring":"fp:7","truncation":3,"coords":["2","5","1"]},"y":{"ring":"fp:7","truncation":3,"coords":["3","0","6"]}})") ==
              run_json({"witt", "mul"},
                       R"({"x":{"ring":"fp:7","truncation":3,"coords":["2","5","1"]},"y":{"ring":"fp:7","truncation":3,"coords":["3","0","6"]}})"));
    j = run_json({"witt", "teich", "--ring", "Z", "--modulus", "3"}, R"({"a":"5"})");
    CHECK(j["coords"] == json::array({"5", "0", "0"}));
    j = run_json({"witt", "versch"}, R"({"r":2,"x":{"ring":"Z","truncation":2,"coords":["4","7"]}})");
    CHECK(j["coords"] == json::array({"0", "4", "0", "7", "0"}));
    j = run_json({"witt", "frob"}, R"({"r":2,"x":{"ring":"Z","truncation":5,"coords":["0","4","0","7","0"]}})");
    // F_2 V_2 = 2: ghost (4, 30) doubles to (8, 60), i.e. coordinates (8, -2).
    CHECK(j["coords"] == json::array({"8", "-2"}));
    j = run_json({"witt", "restrict"}, R"({"target":[1,2],"x":{"ring":"Z","truncation":4,"coords":["1","2","3","4"]}})");
    CHECK(j["coords"] == json::array({"1", "2"}));
    j = run_json({"witt", "neg"}, R"({"x":{"ring":"Z","truncation":1,"coords":["4"]}})");
    CHECK(j["coords"] == json::array({"-4"}));
}

TEST_CASE("cycles subcommands")
{
    // Gamma_{a,2} ^ Gamma_{b,3} = Gamma_{a^3 b^2, 6} over F_5[x] with a = x, b = 2.
    const std::string x = R"({"ring":"fp:5[x]","modulus":6,"terms":[{"generator":["1","0",{"1":"-1"}]}]})";
    const std::string y = R"({"ring":"fp:5[x]","modulus":6,"terms":[{"generator":["1","0","0","-2"]}]})";
    auto j = run_json({"cycles", "wedge"}, R"({"x":)" + x + R"(,"y":)" + y + "}");
    CHECK(j["normal_form"][5] == json({{"3", "4"}}));
    for (int k = 0; k < 5; ++k)
        CHECK(j["normal_form"][k] == json::object());

    j = run_json({"cycles", "tau", "--ring", "Z", "--modulus", "2"}, R"({"series":["1","-2","1"]})");
    CHECK(j["normal_form"] == json::array({"2", "-1"}));
    j = run_json({"cycles", "versch"}, R"({"r":2,"x":{"ring":"Z","modulus":1,"normal_form":["3"]}})");
    CHECK(j["modulus"] == 3);
    CHECK(j["normal_form"] == json::array({"0", "3", "0"}));
    j = run_json({"cycles", "frob"}, R"({"r":2,"x":{"ring":"Z","modulus":3,"normal_form":["0","3","0"]}})");
    CHECK(j["normal_form"] == json::array({"6"}));
    j = run_json({"cycles", "restrict"}, R"({"target":1,"x":{"ring":"Z","modulus":3,"normal_form":["1","3","0"]}})");
    CHECK(j["normal_form"] == json::array({"1"}));

    j = run_json({"cycles", "axiom-v", "--ring", "fp:5[x]"}, R"({"a":{"1":"2"},"r":3})");
    CHECK(j["passed"] == true);
    j = run_json({"cycles", "axiom-v", "--ring", "Z"}, R"({"a":"0","r":3})");
    CHECK(j["both_zero"] == true);

    j = run_json({"cycles", "mod1-witness"},
                 R"({"x":{"ring":"Z","modulus":0,"terms":[{"generator":["1","4"],"multiplicity":"2"}]}})");
    CHECK(j["face_zero"]["terms"].empty());
    CHECK(j["face_one"]["terms"].size() == 1);
}

TEST_CASE("homology and convert")
{
    CHECK(run({"homology", "compute"}, R"({"levels":[1,1],"boundaries":[[["2"]]]})").out ==
          "{\"H0\":[\"Z/2\"],\"H1\":[]}\n");
    const auto j = run_json({"convert"}, R"({"series":{"ring":"Z","coefficients":["1","-2","1"]}})");
    CHECK(j["witt"]["coords"] == json::array({"2", "-1"}));
    CHECK(j["class"]["normal_form"] == json::array({"2", "-1"}));
    CHECK(run_json({"convert", "--to", "series"}, R"({"class":{"ring":"Z","modulus":1,"normal_form":["7"]}})") ==
          json::parse(R"({"series":{"ring":"Z","coefficients":["1","-7"]}})"));
    // Zero vector <-> series 1 <-> empty cycle.
    const auto z = run_json({"convert"}, R"({"witt":{"ring":"Z","truncation":3,"coords":["0","0","0"]}})");
    CHECK(z["series"]["coefficients"] == json::array({"1", "0", "0", "0"}));
    CHECK(z["class"]["normal_form"] == json::array({"0", "0", "0"}));
}

TEST_CASE("exit codes and error records")
{
    auto r = run({"witt", "ghost"}, "{not json");
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["kind"] == "schema");

    r = run({"witt", "add"}, R"({"x":{"ring":"Z","truncation":1,"coords":["1"]},"y":{"ring":"fp:5","truncation":1,"coords":["1"]}})");
    CHECK(r.code == 3);
    CHECK(json::parse(r.err)["error"]["kind"] == "descriptor_mismatch");

    r = run({"convert", "--to", "class"}, R"({"series":{"ring":"Z/6","coefficients":["1","2"]}})");
    CHECK(r.code == 3);

    r = run({"homology", "compute"}, R"({"levels":[1,1,1],"boundaries":[[["1"]],[["1"]]]})");
    CHECK(r.code == 4);
    CHECK(json::parse(r.err)["error"]["kind"] == "invariant");

    CHECK(run({"witt", "frob", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("batch mode keeps going after a bad line")
{
    const auto r = run({"witt", "ghost", "--batch"},
                       "{\"x\":{\"ring\":\"Z\",\"truncation\":1,\"coords\":[\"2\"]}}\n\n[1]\n"
                       "{\"x\":{\"ring\":\"Z\",\"truncation\":2,\"coords\":[\"1\",\"1\"]}}\n");
    CHECK(r.code == 2);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> records;
    while (std::getline(lines, line))
        records.push_back(json::parse(line));
    REQUIRE(records.size() == 3);
    CHECK(records[0]["components"] == json::array({"2"}));
    CHECK(records[1].contains("error"));
    CHECK(records[2]["components"] == json::array({"1", "3"}));
}

TEST_CASE("axiom suites are byte-identical for a fixed seed")
{
    const std::vector<std::string> args = {"axioms", "run",       "--ring",  "fp:7", "--m",     "6",
                                           "--rmax", "4",         "--samples", "30", "--seed",  "42",
                                           "--model", "cycles"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["all_passed"] == true);
    const auto g = run_json({"axioms", "ghost", "--ring", "Z", "--m", "12", "--samples", "20"});
    CHECK(g["suite"] == "ghost");
    CHECK(run({"axioms", "run", "--ring", "Z/6", "--model", "cycles"}).code == 3);
    CHECK(run({"axioms", "run", "--ring", "Z", "--model", "chow"}).code == 2);
}
