#include "doctest.h"
#include "homog/catalogue/reproduce.hpp"

using namespace homog;

TEST_CASE("catalogue certificates pass at a small bound") {
  CatalogueOptions opts;
  opts.data_dir = default_data_dir();
  opts.maxlen = 5;
  std::size_t seen = 0;
  auto cells = reproduce_table(opts, [&](const CatalogueCell&) { ++seen; });
  CHECK(seen == cells.size());
  CHECK(cells.size() > 20u);
  for (const auto& c : cells) {
    INFO(format_cell(c));
    CHECK(c.pass);
  }
  REQUIRE_FALSE(cells.empty());
  CHECK(format_cell(cells.front()).rfind("PASS", 0) == 0);
}

TEST_CASE("missing data directory fails cells instead of throwing") {
  CatalogueOptions opts;
  opts.data_dir = "/nonexistent";
  auto cells = reproduce_table(opts);
  REQUIRE_FALSE(cells.empty());
  for (const auto& c : cells) CHECK_FALSE(c.pass);
}
