#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "descent_poset/bijection.hpp"
#include "descent_poset/cli.hpp"
#include "descent_poset/config.hpp"
#include "descent_poset/errors.hpp"
#include "descent_poset/scan_record.hpp"

using namespace descent_poset;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "descent-poset");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json first_json(const Run& r) { return json::parse(r.out.substr(0, r.out.find('\n'))); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("descent_poset_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("mobius command") {
  auto r = run({"mobius", "--bottom", "21", "--top", "3412", "--method", "recursive"});
  REQUIRE(r.code == kExitOk);
  auto j = first_json(r);
  CHECK(j["value"] == 1);
  CHECK(j["method_used"] == "recursive");
  CHECK(j["cross_checked"] == false);

  r = run({"mobius", "--bottom", "1", "--top", "246135", "--method", "classifier"});
  REQUIRE(r.code == kExitOk);
  j = first_json(r);
  CHECK(j["value"] == -6);
  CHECK(j["case"] == "no-adjacency-even-M");
  CHECK(j["cross_checked"] == true);

  r = run({"mobius", "--bottom", "213", "--top", "2143", "--method", "normal-embedding"});
  CHECK(r.code == kExitPrecondition);

  r = run({"mobius", "--bottom", "132", "--top", "13524"});
  REQUIRE(r.code == kExitOk);
  j = first_json(r);
  CHECK(j["method_used"] == "closed-form");
  CHECK(j["value"] == 4);

  r = run({"mobius", "--bottom", "213", "--top", "142356", "--method", "auto"});
  j = first_json(r);
  CHECK(j["method_used"] == "normal-embedding");
  CHECK(j["value"] == -1);

  r = run({"mobius", "--bottom", "123", "--top", "3412"});
  CHECK(first_json(r)["value"] == 0);

  CHECK(run({"mobius", "--bottom", "1223", "--top", "3412"}).code == kExitInputError);
  CHECK(run({"mobius", "--bottom", "1", "--top", "3412", "--method", "guess"}).code == kExitInputError);
  CHECK(run({"mobius", "--bottom", "1"}).code == kExitInputError);
  CHECK(run({"mobius", "--bottom", "12", "--top", "3412", "--method", "classifier"}).code == kExitPrecondition);
  CHECK(run({"--max-len", "5", "mobius", "--bottom", "1", "--top", "246135", "--method", "recursive"}).code ==
        kExitPrecondition);
  CHECK(run({"--verify-threshold", "20", "mobius", "--bottom", "1", "--top", "21"}).code == kExitPrecondition);
  CHECK(run({"--max-len", "5", "mobius", "--bottom", "1", "--top", "3412"}).code == kExitOk);
  CHECK(run({"--max-len", "5", "--verify-threshold", "6", "mobius", "--bottom", "1", "--top", "3412"}).code ==
        kExitPrecondition);
}

TEST_CASE("text and csv output") {
  auto r = run({"--format", "text", "mobius", "--bottom", "21", "--top", "3412"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("value: 1\n") != std::string::npos);
  r = run({"--format", "csv", "bijection", "--to-word", "263415"});
  CHECK(r.out == "perm,word\n263415,312231\n");
  CHECK(run({"--format", "xml", "bijection", "--to-word", "1"}).code == kExitInputError);
}

TEST_CASE("bijection command") {
  auto r = run({"bijection", "--to-word", "263415"});
  REQUIRE(r.code == kExitOk);
  CHECK(first_json(r)["word"] == "312231");
  r = run({"bijection", "--to-perm", "214321"});
  CHECK(first_json(r)["perm"] == "261543");
  CHECK(run({"bijection", "--to-perm", "1121343"}).code == kExitPrecondition);
  CHECK(run({"bijection"}).code == kExitInputError);
  CHECK(run({"bijection", "--to-word", "1", "--to-perm", "1"}).code == kExitInputError);
}

TEST_CASE("classify command") {
  auto r = run({"classify-one-descent", "--perm", "13524"});
  REQUIRE(r.code == kExitOk);
  auto j = first_json(r);
  CHECK(j["case"] == "no-adjacency-odd");
  CHECK(j["value"] == 3);
  CHECK(j["cases_hit"].size() >= 1);
  CHECK(run({"classify-one-descent", "--perm", "2143"}).code == kExitPrecondition);
}

TEST_CASE("complex and scan commands") {
  auto r = run({"complex", "--bottom", "21", "--top", "3412", "--euler", "--betti", "--facets"});
  REQUIRE(r.code == kExitOk);
  auto j = first_json(r);
  CHECK(j["euler"] == 1);
  CHECK(j["betti"] == json::array({0, 1}));
  CHECK(j["facets"] == json::array({"231", "312"}));
  CHECK(run({"complex", "--bottom", "21", "--top", "21"}).code == kExitPrecondition);

  r = run({"scan-disconnected", "--top", "456123"});
  REQUIRE(r.code == kExitOk);
  j = first_json(r);
  bool found = false;
  for (const auto& d : j["disconnected"]) found = found || d == "123/456123";
  CHECK(found);
  CHECK(j["count"] == j["disconnected"].size());
}

TEST_CASE("enumerate command") {
  auto r = run({"enumerate", "--length", "4", "--descents", "1"});
  REQUIRE(r.code == kExitOk);
  auto perms = first_json(r);
  CHECK(perms["count"] == 11);
  r = run({"enumerate", "--length", "4", "--descents", "1", "--words"});
  auto words = first_json(r);
  CHECK(words["count"] == 11);
  std::vector<std::string> images;
  for (const auto& p : perms["items"]) images.push_back(perm_to_word(parse_permutation(p.get<std::string>())).to_string());
  std::sort(images.begin(), images.end());
  std::vector<std::string> listed = words["items"];
  std::sort(listed.begin(), listed.end());
  CHECK(images == listed);

  r = run({"--format", "text", "enumerate", "--length", "3", "--descents", "0"});
  CHECK(r.out == "123\ncount: 1\n");
  CHECK(run({"enumerate", "--length", "3", "--descents", "3"}).code == kExitPrecondition);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--suite", "euler", "--max-length", "5"});
  REQUIRE(r.code == kExitOk);
  auto j = first_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["checked"].get<int>() > 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == kExitInputError);
  r = run({"verify", "--suite", "tails", "--max-length", "4"});
  REQUIRE(r.code == kExitOk);
  j = first_json(r);
  CHECK(j["notes"]["cross_descent_pair"]["rejected"] == true);
  CHECK(j["notes"]["mu(312,6745123)"] == 1);
}

TEST_CASE("scan-conjecture: json, csv and resume") {
  const auto json_path = temp_file("scan.jsonl");
  const auto csv_path = temp_file("scan.csv");
  REQUIRE(run({"--out", json_path.string(), "scan-conjecture", "--max-length", "6"}).code == kExitOk);
  REQUIRE(run({"--format", "csv", "--out", csv_path.string(), "scan-conjecture", "--max-length", "6"}).code == kExitOk);

  std::ifstream jin(json_path);
  std::ifstream cin_(csv_path);
  std::stringstream jbuf, cbuf;
  jbuf << jin.rdbuf();
  cbuf << cin_.rdbuf();
  const auto jl = lines(jbuf.str());
  const auto cl = lines(cbuf.str());
  REQUIRE(cl.size() == jl.size() + 1);
  std::vector<std::string> columns;
  {
    std::istringstream h(cl[0]);
    for (std::string c; std::getline(h, c, ',');) columns.push_back(c);
  }
  REQUIRE(columns.front() == "subject");
  columns.erase(columns.begin());
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const ScanRecord rec = ScanRecord::from_json(json::parse(jl[i]));
    CHECK(rec.to_csv_row(columns) == cl[i + 1]);
  }
  const auto last = json::parse(jl.back());
  CHECK(last["subject"] == "612345");
  const auto first = json::parse(jl[0]);
  CHECK(first["subject"] == "132");

  // Interrupt: keep a prefix plus a torn line, then resume.
  const auto resumed = temp_file("resumed.jsonl");
  {
    std::ofstream o(resumed);
    for (std::size_t i = 0; i < 10; ++i) o << jl[i] << '\n';
    o << jl[10].substr(0, 7);
  }
  REQUIRE(run({"--out", resumed.string(), "scan-conjecture", "--max-length", "6", "--resume"}).code == kExitOk);
  std::ifstream rin(resumed);
  std::stringstream rbuf;
  rbuf << rin.rdbuf();
  CHECK(rbuf.str() == jbuf.str());

  CHECK(run({"scan-conjecture", "--max-length", "5", "--resume"}).code == kExitPrecondition);
  std::filesystem::remove(json_path);
  std::filesystem::remove(csv_path);
  std::filesystem::remove(resumed);
}

TEST_CASE("configuration") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.verify_threshold = 15;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  CHECK(parse_output_format("csv") == OutputFormat::kCsv);
  CHECK(format_name(OutputFormat::kText) == "text");
  CHECK_THROWS_AS(parse_output_format("yaml"), ParseError);
}

TEST_CASE("scan records") {
  ScanRecord r;
  r.subject = "3412";
  r.set("mu", std::int64_t{-1});
  r.set("flag", true);
  r.set("betti", std::vector<std::int64_t>{0, 0, 1});
  r.set("list", std::vector<std::string>{"1/21", "12/312"});
  CHECK(r.to_csv_row({"mu", "flag", "betti", "list", "missing"}) == "3412,-1,true,0;0;1,1/21;12/312,");
  const ScanRecord back = ScanRecord::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
  CHECK_THROWS_AS(ScanRecord::from_json(json{{"subject", "1"}, {"x", 1.5}}), ParseError);
}
