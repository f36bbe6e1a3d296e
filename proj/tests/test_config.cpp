#include "doctest.h"

#include <sstream>

#include "surdbits/config.hpp"
#include "surdbits/error.hpp"

using namespace surdbits;

TEST_CASE("config defaults") {
  std::istringstream in("");
  const RunConfig cfg = parse_config(in);
  CHECK(cfg.guard_bit_cap == (1u << 21));
  CHECK_FALSE(cfg.nr_cap.has_value());
  CHECK_FALSE(cfg.output_format.has_value());
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# run defaults\n"
      "guard_bit_cap = 4096\n"
      "nr_cap=500   # search caps\n"
      "  mn_cap = 600\n"
      "i_max = 128\n"
      "output_format = json\n"
      "output_path = /tmp/out.txt\n");
  const RunConfig cfg = parse_config(in);
  CHECK(cfg.guard_bit_cap == 4096);
  CHECK(cfg.nr_cap == 500u);
  CHECK(cfg.mn_cap == 600u);
  CHECK(cfg.i_max == 128u);
  CHECK(cfg.output_format == OutputFormat::Json);
  CHECK(cfg.output_path == std::string("/tmp/out.txt"));
}

TEST_CASE("config rejects bad input") {
  for (const char* text : {"nr_cap = 0\n", "nr_cap = -3\n", "bogus = 1\n", "nr_cap\n", "output_format = xml\n",
                           "i_max = 12abc\n"}) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_config(in), Error);
  }
}
