#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wacm/report.hpp"

using namespace wacm;

namespace {

CheckReport tiny_report() {
  CheckReport rep;
  rep.run.points = 3;
  rep.run.tuples = 2;
  rep.run.seed = 42;
  rep.run.tol = 1e-8;
  ReportRow a;
  a.model = "sas-r5";
  a.identity = "AX-1";
  a.hypothesis_ok = true;
  a.n = 3;
  a.max_residual = 1.25e-16;
  a.mean_residual = 0.5e-16;
  a.pass = true;
  ReportRow b;
  b.model = "nsas-s5";
  b.identity = "SAS-0";
  b.hypothesis_ok = false;
  b.n = 3;
  b.max_residual = 0.25;
  b.mean_residual = 0.125;
  b.pass = true;
  b.note = "informational: HSAS not declared for this model";
  rep.rows = {a, b};
  return rep;
}

}  // namespace

TEST_CASE("json payload is byte-stable with fixed key order and 17 significant digits") {
  CheckReport rep = tiny_report();
  std::string j1 = to_json(rep);
  std::string j2 = to_json(rep);
  CHECK(j1 == j2);
  CHECK(j1.find("\"schema\": 1") != std::string::npos);
  CHECK(j1.find("\"seed\": 42") != std::string::npos);
  CHECK(j1.find("\"tol\": 1e-08") != std::string::npos);
  CHECK(j1.find("\"max_residual\": 1.2500000000000001e-16") != std::string::npos);
  CHECK(j1.find("\"note\": \"informational: HSAS not declared for this model\"") !=
        std::string::npos);
  // run block precedes rows; rows keep input order
  CHECK(j1.find("\"run\"") < j1.find("\"rows\""));
  CHECK(j1.find("AX-1") < j1.find("SAS-0"));
}

TEST_CASE("csv columns mirror the json row fields in fixed order") {
  std::string csv = to_csv(tiny_report());
  CHECK(csv.rfind("model,identity,hypothesis_ok,n,max_residual,mean_residual,pass,note\n",
                  0) == 0);
  CHECK(csv.find("sas-r5,AX-1,1,3,") != std::string::npos);
  CHECK(csv.find("nsas-s5,SAS-0,0,3,") != std::string::npos);
}

TEST_CASE("text format marks informational rows") {
  std::string txt = to_text(tiny_report());
  CHECK(txt.find("[pass] nsas-s5 SAS-0") != std::string::npos);
  CHECK(txt.find("(informational)") != std::string::npos);
}

TEST_CASE("doubles are printed with 17 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1e-300) == "1e-300");
}

TEST_CASE("all_pass reflects row status") {
  CheckReport rep = tiny_report();
  CHECK(rep.all_pass());
  rep.rows[0].pass = false;
  CHECK_FALSE(rep.all_pass());
}
