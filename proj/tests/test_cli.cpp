#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "flagcsm/arith.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = flagcsm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FLAGCSM_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> kPieri{"pieri", "--n", "5", "--k", "2", "--u", "23154", "--alpha", "1", "--beta", "1"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(base.end(), extra);
  return base;
}

}  // namespace

TEST_CASE("worked examples through the command line") {
  auto csm = run(with(kPieri, {"--basis", "csm"}));
  CHECK(csm.code == 0);
  CHECK(csm.out == slurp("pieri_csm_23154_k2_hook21.txt"));
  auto sch = run(with(kPieri, {"--basis", "schubert"}));
  CHECK(sch.out == slurp("pieri_schubert_23154_k2_hook21.txt"));

  const std::vector<std::string> mn{"mn", "--n", "5", "--k", "2", "--u", "23154", "--r", "3"};
  CHECK(run(with(mn, {"--basis", "csm"})).out == slurp("mn_csm_23154_k2_r3.txt"));
  CHECK(run(with(mn, {"--basis", "schubert"})).out == slurp("mn_schubert_23154_k2_r3.txt"));

  CHECK(run({"graph", "--n", "3", "--k", "1"}).out == slurp("bruhat_s3_k1.dot"));
  CHECK(run({"graph", "--n", "3", "--k", "2"}).out == slurp("bruhat_s3_k2.dot"));

  const std::vector<std::string> gr{"grassmann", "--n", "7", "--k", "3", "--lambda", "3,2,0", "--rule", "pieri"};
  CHECK(run(with(gr, {"--alpha", "0", "--beta", "2"})).out == slurp("grassmann_pieri_320_e3.txt"));
  CHECK(run(with(gr, {"--alpha", "2", "--beta", "0"})).out == slurp("grassmann_pieri_320_h3.txt"));
  CHECK(run(with(gr, {"--alpha", "1", "--beta", "1"})).out == slurp("grassmann_pieri_320_s21.txt"));
  CHECK(run({"grassmann", "--n", "9", "--k", "4", "--lambda", "4,2,2,0", "--rule", "mn", "--r", "3"}).out ==
        slurp("grassmann_mn_4220_r3.txt"));
}

TEST_CASE("rim hook counting command") {
  auto r = run({"rht", "--outer", "4,4,1", "--inner", "1", "--r", "2", "--method", "enumerate"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  auto all = run({"rht", "--outer", "4,4,1", "--inner", "1", "--r", "2", "--method", "all"});
  CHECK(all.code == 0);
  CHECK(all.out == "enumerate : 4\nlimit : 4\nmaj : 4\n");
  auto straight = run({"rht", "--outer", "3,3", "--r", "2", "--method", "all"});
  CHECK(straight.code == 0);
  CHECK(straight.out == "enumerate : 3\nlimit : 3\nmaj : 3\nhook : 3\n");
}

TEST_CASE("chevalley case and json output") {
  auto chev = run({"pieri", "--n", "3", "--k", "1", "--u", "123", "--alpha", "0", "--beta", "0", "--basis", "schubert"});
  CHECK(chev.code == 0);
  CHECK(chev.out == "diagonal 123 : t1\n213 : 1\n");

  auto j = run(with(kPieri, {"--basis", "schubert", "--format", "json"}));
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["basis"] == "schubert");
  CHECK(doc["equivariant"] == true);
  // Rebuild the table form from the JSON document.
  std::ostringstream table;
  table << "diagonal 23154 : " << doc["diagonal"].get<std::string>() << "\n";
  for (const auto& t : doc["terms"]) table << t["perm"].get<std::string>() << " : " << t["coeff"].get<std::string>() << "\n";
  CHECK(table.str() == slurp("pieri_schubert_23154_k2_hook21.txt"));
  for (const auto& t : doc["terms"])
    CHECK(flagcsm::MPoly::parse(5, t["coeff"].get<std::string>()).to_string() == t["coeff"].get<std::string>());
}

TEST_CASE("output is deterministic") {
  auto a = run(with(kPieri, {"--basis", "csm", "--format", "json"}));
  std::vector<std::string> threaded{"--threads", "2"};
  threaded.insert(threaded.end(), kPieri.begin(), kPieri.end());
  auto b = run(with(threaded, {"--basis", "csm", "--format", "json"}));
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"pieri", "--n", "5"}).code == 2);
  CHECK(run({"pieri", "--n", "5", "--k", "2", "--u", "2315"}).code == 2);
  CHECK(run(with(kPieri, {"--basis", "hall"})).code == 2);
  CHECK(run({"rht", "--outer", "3,1", "--r", "3"}).code == 2);
  CHECK(run({"rht", "--outer", "3,1", "--inner", "1", "--r", "3", "--method", "hook"}).code == 2);
  CHECK(run({"pieri", "--n", "4", "--k", "1", "--u", "1234", "--factor", "schubert-class", "--alpha", "0", "--beta", "1"})
            .code == 3);
  CHECK(run({"grassmann", "--n", "4", "--k", "2", "--lambda", "3", "--rule", "pieri"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("positivity scans") {
  auto p3 = run({"scan-positivity", "--n", "3", "--mode", "product"});
  CHECK(p3.code == 0);
  CHECK(p3.out == "checked 36 pairs, 0 violations\n");
  auto p2 = run({"scan-positivity", "--n", "2", "--mode", "product"});
  CHECK(p2.out == "checked 4 pairs, 0 violations\n");
  auto s4 = run({"scan-positivity", "--n", "4", "--mode", "schubert-expansion"});
  CHECK(s4.code == 0);
  CHECK(s4.out == "checked 24 classes, 0 violations\n");
}
