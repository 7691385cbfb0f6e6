#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "faulhaber/generators.hpp"
#include "faulhaber/output.hpp"

using namespace faulhaber;

TEST_CASE("plain rendering") {
  PowerSumTable table;
  CHECK(render_plain(3, table.power_sum(3)) == "S3 = S1^2");
  CHECK(render_plain(1, table.power_sum(1)) == "S1 = S1");
  CHECK(render_plain(4, table.power_sum(4)) == "S4 = -1/5 S2 + 6/5 S1 S2");
  CHECK(render_plain(9, table.power_sum(9)) ==
        "S9 = -3/5 S1^2 + 12/5 S1^3 - 4 S1^4 + 16/5 S1^5");
  CHECK(render_plain(0, ReducedPowerPoly::zero()) == "S0 = 0");
}

TEST_CASE("latex rendering matches the factored display style") {
  PowerSumTable table;
  CHECK(render_latex(9, table.power_sum(9)) ==
        "\\frac{1}{5}S_1^2\\left(-3 + 12 S_1 - 20 S_1^2 + 16 S_1^3\\right)");
  CHECK(render_latex(10, table.power_sum(10)) ==
        "\\frac{1}{11}S_2\\left(5 - 30 S_1 + 68 S_1^2 - 80 S_1^3 + 48 S_1^4\\right)");
  CHECK(render_latex(3, table.power_sum(3)) == "S_1^2\\left(1\\right)");
  CHECK(render_latex(5, table.power_sum(5)) == "\\frac{1}{3}S_1^2\\left(-1 + 4 S_1\\right)");
  CHECK(render_latex(2, table.power_sum(2)) == "S_2\\left(1\\right)");
  CHECK(render_latex(1, table.power_sum(1)) == "S_1\\left(1\\right)");
}

TEST_CASE("output records") {
  PowerSumTable table;
  const OutputRecord rec = make_output_record(10, table.power_sum(10), table.kind());
  CHECK(rec.k == 10);
  CHECK(rec.parity == Parity::even);
  CHECK(rec.factor == "S2");
  CHECK(rec.f_coeffs ==
        std::vector<std::string>{"5/11", "-30/11", "68/11", "-80/11", "48/11"});
  CHECK(rec.a_coeffs.empty());
  CHECK(rec.b_coeffs == rec.f_coeffs);

  const OutputRecord rec9 = make_output_record(9, table.power_sum(9), table.kind());
  CHECK(rec9.factor == "S1^2");
  CHECK(rec9.f_coeffs == std::vector<std::string>{"-3/5", "12/5", "-4", "16/5"});
  CHECK(rec9.a_coeffs == std::vector<std::string>{"0", "0", "-3/5", "12/5", "-4", "16/5"});
  CHECK(rec9.b_coeffs.empty());

  const OutputRecord rec1 = make_output_record(1, table.power_sum(1), table.kind());
  CHECK(rec1.factor == "S1");
  CHECK(rec1.f_coeffs == std::vector<std::string>{"1"});
}

TEST_CASE("json round-trip reproduces the generated polynomial") {
  PowerSumTable table(GeneratorKind::alternative);
  for (unsigned k = 1; k <= 25; ++k) {
    const ReducedPowerPoly p = table.power_sum(k);
    const OutputRecord rec = make_output_record(k, p, table.kind());
    const auto j = rec.to_json();
    const OutputRecord back = OutputRecord::from_json(nlohmann::json::parse(j.dump()));
    CAPTURE(k);
    CHECK(back.generator == GeneratorKind::alternative);
    CHECK(back.reconstruct_reduced() == p);
    CHECK(back.reconstruct_factored() == p);
  }
}

TEST_CASE("json field layout") {
  PowerSumTable table;
  const auto j = make_output_record(4, table.power_sum(4), table.kind()).to_json();
  CHECK(j.at("k") == 4);
  CHECK(j.at("parity") == "even");
  CHECK(j.at("factor") == "S2");
  CHECK(j.at("generator") == "standard");
  CHECK(j.at("reduced").at("a_coeffs").empty());
  CHECK(j.at("reduced").at("b_coeffs") == nlohmann::json({"-1/5", "6/5"}));
}

TEST_CASE("table rendering") {
  PowerSumTable table;
  std::vector<OutputRecord> rows;
  for (unsigned k = 2; k <= 5; ++k)
    rows.push_back(make_output_record(k, table.power_sum(k), table.kind()));

  const std::string csv = render_table_csv(rows);
  CHECK(csv == "k,factor,coefficients\n"
               "2,S2,1\n"
               "3,S1^2,1\n"
               "4,S2,-1/5;6/5\n"
               "5,S1^2,-1/3;4/3\n");

  const std::string plain = render_table_plain(rows);
  CHECK(plain == "   2  S2    1\n"
                 "   3  S1^2  1\n"
                 "   4  S2    -1/5 6/5\n"
                 "   5  S1^2  -1/3 4/3\n");

  const std::string jsonl = render_table_jsonl(rows);
  int lines = 0;
  std::size_t pos = 0;
  while ((pos = jsonl.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 4);
  const auto first = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
  CHECK(first.at("k") == 2);
}

TEST_CASE("verification report serialization") {
  VerificationReport report;
  report.k = 10;
  report.n_max = 3;
  report.pass = false;
  report.failures.push_back({2, "1025", "1026"});
  const auto j = report_to_json(report);
  CHECK(j.at("k") == 10);
  CHECK(j.at("n_max") == 3);
  CHECK(j.at("pass") == false);
  REQUIRE(j.at("failures").size() == 1);
  CHECK(j.at("failures")[0].at("n") == 2);
  CHECK(j.at("failures")[0].at("expected") == "1025");
  CHECK(j.at("failures")[0].at("got") == "1026");
}

TEST_CASE("canonical hashes agree across strategies") {
  PowerSumTable standard(GeneratorKind::standard);
  PowerSumTable alternative(GeneratorKind::alternative);
  for (unsigned k = 2; k <= 20; ++k) {
    CAPTURE(k);
    CHECK(canonical_hash(standard.power_sum(k)) == canonical_hash(alternative.power_sum(k)));
    CHECK(canonical_hash(standard.power_sum(k)) != canonical_hash(standard.power_sum(k - 1)));
  }
}
