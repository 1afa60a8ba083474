#include <algorithm>

#include "doctest.h"
#include "garside/incidence.hpp"
#include "garside/serialize.hpp"
#include "json.hpp"

using namespace garside;

TEST_CASE("formats") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("plain") == Format::Plain);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  CHECK(csv_field("abc") == "abc");
  CHECK(csv_field("(2,1)") == "\"(2,1)\"");
  CHECK(csv_field("a\"b,") == "\"a\"\"b,\"");
}

TEST_CASE("matrix rendering") {
  const auto m = build_Mbar(3);
  const auto doc = nlohmann::json::parse(render(m, Format::Json));
  CHECK(doc["n"] == 3);
  CHECK(doc["kind"] == "Mbar");
  REQUIRE(doc["rows"].size() == m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) CHECK(doc["rows"][r][c].get<std::string>() == m.at(r, c).get_str());
  }
  CHECK(doc["labels"].get<std::vector<std::string>>() == m.labels());

  const auto csv = render(m, Format::Csv);
  CHECK(csv.rfind("label,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(m.size() + 1));

  const auto plain = render(m, Format::Plain);
  CHECK(plain.rfind("Mbar n=3 size=3", 0) == 0);
}

TEST_CASE("report rendering") {
  FormulaReport r{"demo", "1<=n<=2", {}};
  r.add("n=1", Integer(3), Integer(3));
  r.add_informational("n=2", Integer(4), Integer(5), "paper-discrepancy: printed");
  const auto doc = nlohmann::json::parse(render({r}, Format::Json));
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["passed"] == true);
  CHECK(doc[0]["points"][1]["flag"] == "paper-discrepancy");
  CHECK(doc[0]["points"][0].contains("flag") == false);

  const auto csv = render({r}, Format::Csv);
  CHECK(csv.find("demo,n=1,3,3,ok,") != std::string::npos);
  CHECK(csv.find("demo,n=2,4,5,paper-discrepancy,") != std::string::npos);
  CHECK(render({r}, Format::Plain).rfind("demo [1<=n<=2] PASS", 0) == 0);
}
