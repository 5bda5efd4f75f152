#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "z3flow/catalog.hpp"
#include "z3flow/io.hpp"

using namespace z3flow;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("z3flow_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("documented exit codes") {
  std::string g3 = write_temp("g3.json", to_json_text(catalog::get("G3").graph));
  CHECK(call({"decide", g3, "--mod3"}).code == 1);
  CHECK(call({"catalog", "verify", "--all"}).code == 0);
  CHECK(call({"decide", "nosuch.txt", "--mod3"}).code == 2);
  CHECK(call({"decide", g3}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("capability errors exit with 3") {
  std::string text = "25 24\n";
  for (int i = 0; i < 24; ++i) text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  std::string path = write_temp("p25.txt", text);
  CHECK(call({"connectivity", path, "--odd"}).code == 3);
  CHECK(call({"verify", "r-table", "--n", "7"}).code == 3);
}

TEST_CASE("decide modes") {
  std::string k5 = write_temp("k5.txt", to_edgelist(fixtures::complete(5)));
  CHECK(call({"decide", k5, "--z3conn"}).code == 0);
  CHECK(call({"decide", k5, "--mod3", "--via-reduction"}).code == 0);
  std::string c4 = write_temp("c4.txt", to_edgelist(fixtures::cycle(4)));
  std::string b = write_temp("b.txt", "1 2 0 0\n");
  Result r = call({"decide", c4, "--boundary", b, "--witness"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  Result z = call({"decide", c4, "--z3conn", "--json"});
  CHECK(z.code == 1);
  auto doc = nlohmann::json::parse(z.out);
  CHECK(doc["verdict"] == "infeasible");
  CHECK(doc["result"]["failing_boundary"].is_array());
}

TEST_CASE("json output is deterministic and carries the input digest") {
  std::string g = write_temp("w5.txt", to_edgelist(fixtures::wheel(5)));
  Result a = call({"--json", "connectivity", g, "--odd", "--essential", "--alpha"});
  Result b = call({"connectivity", g, "--alpha", "--essential", "--odd", "--json"});
  CHECK(a.code == 0);
  auto da = nlohmann::json::parse(a.out);
  auto db = nlohmann::json::parse(b.out);
  CHECK(da == db);
  CHECK(da["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK_FALSE(da.contains("wall_time"));
  CHECK(call({"--json", "verify", "lemma", "reversal", "--samples", "30", "--seed", "5"}).out ==
        call({"--json", "--threads", "3", "verify", "lemma", "reversal", "--samples", "30",
              "--seed", "5"}).out);
  CHECK(cli::digest("") == 0xcbf29ce484222325ULL);
  CHECK(cli::digest("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("reduce, wheel and wcontract") {
  std::string k5 = write_temp("k5r.txt", to_edgelist(fixtures::complete(5)));
  fs::path trace = fs::temp_directory_path() / "z3flow_cli_trace.json";
  Result r = call({"reduce", k5, "--trace", trace.string(), "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["graph"]["vertices"].size() == 1);
  CHECK(fs::exists(trace));

  Multigraph w = fixtures::wheel(5);
  std::string wp = write_temp("w5b.txt", to_edgelist(w));
  Result found = call({"wheel", wp, "--odd"});
  CHECK(found.code == 0);
  CHECK(call({"wheel", wp, "--even"}).code == 1);

  Multigraph h = w;
  VertexId apex = h.add_vertex();
  for (VertexId v = 0; v < 6; ++v) h.add_edge(apex, v);
  std::string hp = write_temp("w5apex.txt", to_edgelist(h));
  Result c = call({"wcontract", hp, "--center", "5", "--rim", "0,1,2,3,4", "--X", "0,1", "--json"});
  CHECK(c.code == 0);
  auto cd = nlohmann::json::parse(c.out);
  CHECK(cd["result"]["graph"]["vertices"].size() == 3);
  CHECK(call({"wcontract", hp, "--center", "5", "--rim", "0,1,2,3,4", "--X", "0,2"}).code == 2);
}

TEST_CASE("catalog and verify commands") {
  CHECK(call({"catalog", "list"}).out.find("FZ-12") != std::string::npos);
  CHECK(call({"catalog", "show", "G18", "--dot"}).out.find("graph") != std::string::npos);
  CHECK(call({"catalog", "show", "W", "--n", "4"}).code == 0);
  CHECK(call({"catalog", "show", "special-18"}).code == 2);
  CHECK(call({"catalog", "verify", "FZ-9"}).code == 0);
  Result r = call({"verify", "r-table", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("extremal is G3") != std::string::npos);
  CHECK(call({"verify", "lemma", "nope"}).code == 2);
  CHECK(call({"verify", "lemma", "order13", "--samples", "10"}).code == 0);
  CHECK(call({"verify", "all", "--only", "wheels"}).code == 0);
  std::string g3 = write_temp("g3f.json", to_json_text(catalog::get("G3").graph));
  auto fam = nlohmann::json::parse(call({"verify", "family", g3, "--json"}).out);
  CHECK(fam["result"]["in_F1"] == true);
}
