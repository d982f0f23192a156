#include <doctest.h>

#include <string>
#include <vector>

#include <rootrel/pipeline.hpp>

#include "support.hpp"

using namespace rootrel;
using algebra::BigInt;
using algebra::Rational;
using pipeline::AnalysisReport;
using pipeline::AnalysisRequest;

namespace {

AnalysisRequest request_from_file(const std::string& name) {
  return pipeline::parse_request(
      testsupport::read_file(testsupport::data_path(name)));
}

}  // namespace

TEST_CASE("request parsing") {
  AnalysisRequest req = pipeline::parse_request(
      R"({"polynomial": [-2, 0, 1]})");
  CHECK(req.f.coeffs == std::vector<BigInt>{-2, 0, 1});
  CHECK(req.root_exprs.empty());
  CHECK(req.action.empty());
  CHECK(req.options.digits == 64);
  CHECK(req.options.max_digits == 1024);
  CHECK(req.options.oracle);
  CHECK(req.options.format == "json");
  CHECK(req.options.height_bound == BigInt(1) << 64);

  req = pipeline::parse_request(R"({
    "polynomial": ["123456789012345678901234567890", "0", "1"],
    "roots": ["z", "z^2+1"],
    "options": {"precision": 128, "max_precision": 256,
                "den_bound": "99991", "height_bound": 4096,
                "oracle": false, "format": "table"}
  })");
  CHECK(req.f.coeffs[0] == BigInt("123456789012345678901234567890"));
  CHECK(req.root_exprs == std::vector<std::string>{"z", "z^2+1"});
  CHECK(req.options.digits == 128);
  CHECK(req.options.max_digits == 256);
  CHECK(req.options.den_bound == 99991);
  CHECK(req.options.height_bound == 4096);
  CHECK_FALSE(req.options.oracle);
  CHECK(req.options.format == "table");

  // 1-based permutation arrays.
  req = pipeline::parse_request(R"({
    "polynomial": [-2, 0, 1],
    "galois_action": {"sigma": [2, 1]}
  })");
  REQUIRE(req.action.size() == 1);
  CHECK(req.action[0].first == "sigma");
  CHECK(req.action[0].second.images() == std::vector<int>{1, 0});
}

TEST_CASE("request validation failures") {
  using pipeline::parse_request;
  CHECK_THROWS_AS(parse_request("not json"), RequestError);
  CHECK_THROWS_AS(parse_request(R"({"polynomial": [1, 1]})"), RequestError);
  CHECK_THROWS_AS(parse_request(R"({"polynomial": [-2, 0, 2]})"),
                  RequestError);
  CHECK_THROWS_AS(parse_request(R"({"polynomial": [-2, 0, 1, 0]})"),
                  RequestError);
  CHECK_THROWS_AS(parse_request(R"({"polynomial": [-2, 0, 1], "zzz": 1})"),
                  RequestError);
  CHECK_THROWS_AS(
      parse_request(R"({"polynomial": [-2, 0, 1], "options": {"bad": 1}})"),
      RequestError);
  CHECK_THROWS_AS(
      parse_request(
          R"({"polynomial": [-2, 0, 1], "options": {"format": "xml"}})"),
      RequestError);
  CHECK_THROWS_AS(
      parse_request(
          R"({"polynomial": [-2, 0, 1], "galois_action": {"sigma": [1]}})"),
      RequestError);
  CHECK_THROWS_AS(
      parse_request(
          R"({"polynomial": [-2, 0, 1], "galois_action": {"sigma": [0, 1]}})"),
      RequestError);
  CHECK_THROWS_AS(
      parse_request(
          R"({"polynomial": [-2, 0, 1], "galois_action": {"sigma": [1, 1]}})"),
      RequestError);
  // Escalation cannot run backwards.
  CHECK_THROWS_AS(
      parse_request(
          R"({"polynomial": [-2, 0, 1],
              "options": {"precision": 128, "max_precision": 64}})"),
      RequestError);
}

TEST_CASE("quadratic end to end") {
  AnalysisRequest req = request_from_file("quadratic.json");
  AnalysisReport rep = pipeline::run_pipeline(req);
  CHECK(rep.galois.cls.name == "C2");
  CHECK_FALSE(rep.partial);
  CHECK(rep.digits_used == 64);
  REQUIRE(rep.rows.size() == 1);
  const auto& row = rep.rows[0];
  CHECK(row.expression == "z");
  CHECK(row.trace == 0);
  // Only the trace line: alpha1 - alpha2 = 2 sqrt(2) kills the sign
  // character, so nothing is added to the trivial relation.
  CHECK(row.assembled.dimension == 1);
  REQUIRE(row.oracle.has_value());
  CHECK(row.oracle->dimension == 1);
  REQUIRE(row.comparison.has_value());
  CHECK(row.comparison->rank_equal);
  CHECK(row.comparison->spans_equal);
  CHECK(row.comparison->projections_ok);
  CHECK(pipeline::report_exit_code(rep) == 0);
}

TEST_CASE("json rendering is deterministic") {
  AnalysisRequest req = request_from_file("sextic_s3.json");
  AnalysisReport a = pipeline::run_pipeline(req);
  AnalysisReport b = pipeline::run_pipeline(req);
  CHECK(pipeline::render_json(a) == pipeline::render_json(b));
}

TEST_CASE("sextic table output") {
  AnalysisRequest req = request_from_file("sextic_s3.json");
  AnalysisReport rep = pipeline::run_pipeline(req);
  std::string table = pipeline::render_table(rep);
  CHECK(table.find("root | a1+a2+a3 | A21/A11") != std::string::npos);
  CHECK(table.find("z | 0 | -1") != std::string::npos);
  CHECK(table.find("-z^2-z^3+z^5 |  | oo") != std::string::npos);
  CHECK(table.find("5-5z-3z^4 | 15 | 2/7") != std::string::npos);
}

TEST_CASE("supplied action is validated against the true automorphisms") {
  AnalysisRequest req = request_from_file("sextic_s3.json");
  AnalysisReport rep = pipeline::run_pipeline(req);
  CHECK(rep.galois.cls.name == "S3");

  // A permutation that is not an automorphism is refused.
  AnalysisRequest bad = req;
  REQUIRE(bad.action[1].first == "mu");
  bad.action[1].second = group::Permutation({5, 4, 3, 2, 1, 0});
  CHECK_THROWS_AS(pipeline::run_pipeline(bad), GroupMismatch);
}

TEST_CASE("partial report for an undecomposed group") {
  AnalysisRequest req = request_from_file("octic_q8.json");
  AnalysisReport rep = pipeline::run_pipeline(req);
  CHECK(rep.partial);
  CHECK_FALSE(rep.two_dim_supported);
  CHECK(rep.galois.cls.name == "other");
  REQUIRE(rep.residual_idempotent.has_value());
  // The leftover is 1 - sum of the four degree-1 idempotents: half at the
  // identity, and it is not zero.
  CHECK((*rep.residual_idempotent)[0] == algebra::make_rational(1, 2));
  CHECK(rep.characters.size() == 4);
  REQUIRE(rep.rows.size() == 1);
  CHECK_FALSE(rep.rows[0].oracle.has_value());
  CHECK_FALSE(rep.rows[0].comparison.has_value());
  CHECK(rep.rows[0].assembled.dimension == 4);
  CHECK(pipeline::report_exit_code(rep) == 4);

  std::string json = pipeline::render_json(rep);
  CHECK(json.find("\"partial\": true") != std::string::npos);
  CHECK(json.find("\"residual_idempotent\"") != std::string::npos);
}

TEST_CASE("precision escalates until decisions certify") {
  AnalysisRequest req = request_from_file("sextic_s3.json");
  req.options.digits = 16;
  req.options.max_digits = 256;
  AnalysisReport rep = pipeline::run_pipeline(req);
  CHECK(rep.digits_used >= 16);
  CHECK_FALSE(rep.partial);
  // Same conclusions as the 64-digit run.
  AnalysisRequest base = request_from_file("sextic_s3.json");
  AnalysisReport want = pipeline::run_pipeline(base);
  REQUIRE(rep.rows.size() == want.rows.size());
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(rep.rows[i].assembled.dimension == want.rows[i].assembled.dimension);
    CHECK(rep.rows[i].trace == want.rows[i].trace);
  }
}

TEST_CASE("non galois polynomial is rejected at saturation") {
  AnalysisRequest req = pipeline::parse_request(R"({
    "polynomial": [-2, 0, 0, 1],
    "options": {"height_bound": 1000}
  })");
  CHECK_THROWS_AS(pipeline::run_pipeline(req), NotGalois);
}

TEST_CASE("non injective expressions are request errors") {
  AnalysisRequest req = pipeline::parse_request(R"({
    "polynomial": [-2, 0, 1],
    "roots": ["z^2"]
  })");
  CHECK_THROWS_AS(pipeline::run_pipeline(req), RequestError);
}

TEST_CASE("exit codes") {
  CHECK(pipeline::error_exit_code(RequestError("x")) == 1);
  CHECK(pipeline::error_exit_code(GroupMismatch("x")) == 1);
  CHECK(pipeline::error_exit_code(PrecisionExhausted("x")) == 2);
  CHECK(pipeline::error_exit_code(InsufficientPrecision("x")) == 2);
  CHECK(pipeline::error_exit_code(AmbiguousZero("x")) == 2);
  CHECK(pipeline::error_exit_code(NotGalois("x")) == 3);
  CHECK(pipeline::error_exit_code(NotRegular("x")) == 3);
  CHECK(pipeline::error_exit_code(NotSquarefree("x")) == 3);
  CHECK(pipeline::error_exit_code(UnsupportedGroup("x")) == 4);
  CHECK(pipeline::error_exit_code(SpanMismatch("x")) == 5);
  CHECK(pipeline::error_exit_code(DependentBasis("x")) == 5);
  CHECK(pipeline::error_exit_code(std::runtime_error("x")) == 5);
}

TEST_CASE("report json carries the schema fields") {
  AnalysisRequest req = request_from_file("quadratic.json");
  AnalysisReport rep = pipeline::run_pipeline(req);
  std::string json = pipeline::render_json(rep);
  for (const char* key :
       {"\"polynomial\"", "\"precision\"", "\"roots\"", "\"group\"",
        "\"characters\"", "\"rows\"", "\"partial\"", "\"err_exponent\"",
        "\"cayley\"", "\"generators\"", "\"comparison\"", "\"provenance\""})
    CHECK(json.find(key) != std::string::npos);
  CHECK(json.find("\"classification\": \"C2\"") != std::string::npos);
}
