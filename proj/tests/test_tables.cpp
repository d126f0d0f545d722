#include "doctest.h"

#include "mip/error.hpp"
#include "mip/reference_values.hpp"
#include "mip/tables.hpp"

using namespace mip;

TEST_CASE("every table reproduces its reference values") {
  for (const auto& name : table_names()) {
    if (name == "example-d8q8") continue;
    CAPTURE(name);
    const TableReport r = run_table(name);
    CHECK_FALSE(r.cells.empty());
    for (const auto& c : r.cells) {
      CAPTURE(c.row);
      CAPTURE(c.column);
      CAPTURE(c.computed);
      CAPTURE(c.expected);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("the D8/Q8 example has a single mismatch, the Gamma square count") {
  const TableReport r = run_table("example-d8q8");
  REQUIRE(r.failures() == 1);
  for (const auto& c : r.cells)
    if (!c.pass) {
      CHECK(c.computed == "12");
      CHECK(c.expected == std::to_string(reference::kGammaNonzeroSquares));
    }
  CHECK(r.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("closed forms against class regions") {
  for (const auto& row : reference::max_class3_rows()) {
    CAPTURE(row.first);
    CAPTURE(row.second);
    const auto h = reference::hh1_contributions(row.first, row.second);
    CHECK(h.type1 + h.type2 + h.type3 + h.type4 == reference::hh1_max_class3(row.first, row.second));
  }
}

TEST_CASE("table output formats") {
  const TableReport r = run_table("broche");
  CHECK(r.all_pass());
  CHECK(r.to_json().find("\"cells\"") != std::string::npos);
  CHECK_THROWS_AS(run_table("nope"), InvalidArgument);
}
