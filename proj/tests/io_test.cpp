#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "arrangio/errors.hpp"
#include "arrangio/generators.hpp"
#include "arrangio/io.hpp"

using namespace arrangio;

namespace {

std::vector<ProjLine> sorted_lines(const Arrangement& a) {
  std::vector<ProjLine> ls = a.lines();
  std::sort(ls.begin(), ls.end());
  return ls;
}

}  // namespace

TEST_CASE("field designators") {
  CHECK(parse_field_flag("Q")->kind() == FieldKind::rationals);
  CHECK(parse_field_flag("Fp:7")->characteristic_p() == 7);
  CHECK(parse_field_flag("cyclotomic:12")->cyclo_n() == 12);
  CHECK(field_flag_spec(*Field::prime(3)) == "Fp:3");
  CHECK(field_flag_spec(*Field::rationals()) == "Q");
  CHECK_THROWS_AS(parse_field_flag("R"), BadInputFile);
  CHECK_THROWS_AS(parse_field_flag("Fp:8"), NotPrime);
}

TEST_CASE("arrangement documents round trip over every field kind") {
  for (const Arrangement& a :
       {example_nine(), boroczky(3), fano(), near_pencil(5)}) {
    const std::string doc = arrangement_to_json(a);
    const Arrangement back = arrangement_from_json_text(doc);
    CHECK(back.field()->same(*a.field()));
    CHECK(sorted_lines(back) == sorted_lines(a));
    // Stats computed from the reloaded copy match the in-memory ones.
    const auto sa = stats(a), sb = stats(back);
    CHECK(sa.n == sb.n);
    CHECK(sa.sing_total == sb.sing_total);
    CHECK(sa.t_k == sb.t_k);
    // Serialization is deterministic.
    CHECK(arrangement_to_json(back) == doc);
  }
}

TEST_CASE("point and labeling documents round trip") {
  const PointConfig pc = make_point_config(
      {{Rational(0), Rational(0)},
       {Rational(1, 2), Rational(-3)},
       {Rational(2), Rational(7, 5)}});
  const PointConfig back = points_from_json_text(points_to_json(pc));
  CHECK(back.points == pc.points);

  const SSConfig cfg = bm_template(5);
  const SSConfig cback = ssconfig_from_json_text(ssconfig_to_json(cfg));
  CHECK(cback.m == 5);
  CHECK(cback.k == cfg.k);
}

TEST_CASE("malformed documents are rejected with the input-error type") {
  CHECK_THROWS_AS(arrangement_from_json_text("not json"), BadInputFile);
  CHECK_THROWS_AS(arrangement_from_json_text("{}"), BadInputFile);
  CHECK_THROWS_AS(
      arrangement_from_json_text(
          R"({"field":"Q","lines":[["1","0"]]})"),
      BadInputFile);
  CHECK_THROWS_AS(
      arrangement_from_json_text(
          R"({"field":"Q","lines":[["1","x","0"]]})"),
      BadInputFile);
  CHECK_THROWS_AS(
      arrangement_from_json_text(
          R"({"field":{"cyclotomic":4},"lines":[[["1"],["0"],["0"]]]})"),
      BadInputFile);  // payload shorter than phi(n)
  CHECK_THROWS_AS(points_from_json_text(R"({"points":[["1/0","2"]]})"),
                  BadInputFile);
  CHECK_THROWS_AS(load_arrangement("/nonexistent/path.json"), BadInputFile);
}

TEST_CASE("file helpers round trip through disk") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "arrangio_io_test.json").string();
  const Arrangement a = boroczky(4);
  save_text(path, arrangement_to_json(a));
  const Arrangement back = load_arrangement(path);
  CHECK(sorted_lines(back) == sorted_lines(a));
  std::remove(path.c_str());
}

TEST_CASE("canonical reports are byte-identical and meta-free") {
  const Arrangement a = example_nine();
  const std::string c1 = stats_report_json(a, {"analyze", "in.json", true});
  const std::string c2 = stats_report_json(a, {"analyze", "other.json", true});
  CHECK(c1 == c2);
  CHECK(c1.find("meta") == std::string::npos);
  const std::string m1 = stats_report_json(a, {"analyze", "in.json", false});
  CHECK(m1.find("\"meta\"") != std::string::npos);
  CHECK(m1.find("in.json") != std::string::npos);
}

TEST_CASE("report documents carry the advertised verdict fields") {
  const Arrangement a = example_nine();
  const std::string stats_doc = stats_report_json(a, {"analyze", "", true});
  CHECK(stats_doc.find("\"n\": 9") != std::string::npos);
  CHECK(stats_doc.find("\"sing_total\": 13") != std::string::npos);

  const std::string check_doc =
      theorem_report_json(run_all_checks(a, "nine"), {"check", "", true});
  CHECK(check_doc.find("\"all_hold\": true") != std::string::npos);

  const auto solve = realize_or_refute(bm_template(4), Field::rationals());
  const ClaimTrace chain = claim_sequence_check(4);
  const std::string solve_doc =
      solve_report_json(bm_template(4), solve, &chain, {"certify", "", true});
  CHECK(solve_doc.find("\"outcome\": \"refuted\"") != std::string::npos);
  CHECK(solve_doc.find("\"coefficient\": \"3\"") != std::string::npos);
  CHECK(solve_doc.find("\"replays\": true") != std::string::npos);
  CHECK(solve_doc.find("\"final_coefficient\": \"3\"") != std::string::npos);
}
