#include <doctest.h>

#include <random>

#include "rmg/fixtures.hpp"
#include "rmg/table_io.hpp"

using namespace rmg;

TEST_CASE("parse Table 1 text") {
  const char* text =
      "4\n"
      "# the order-4 right modular idempotent quasigroup\n"
      "0 2 3 1\n"
      "3 1 0 2\n"
      "1 3 2 0   # trailing comment\n"
      "2 0 1 3\n";
  CHECK(parse_table(text) == fixture("W"));
}

TEST_CASE("parse minimal and CRLF tables") {
  CHECK(parse_table("1\n0\n").order() == 1);
  CHECK(parse_table("2\r\n0 0\r\n1 1\r\n") == Magma(2, {0, 0, 1, 1}));
  CHECK(parse_table("2\n0 0\n1 1") == Magma(2, {0, 0, 1, 1}));  // no final LF
}

TEST_CASE("named tables: declared names win over indices") {
  const char* text =
      "3\n"
      "a b 1\n"
      "a b a\n"
      "b b b\n"
      "a b 1\n";
  const Magma m = parse_table(text);
  CHECK(m == fixture("C1"));
  REQUIRE(m.names().has_value());
  CHECK((*m.names())[2] == "1");
}

TEST_CASE("format emits names only when expressible") {
  // W's names are numerals, so its text has no names line
  const std::string w_text = format_table(fixture("W"));
  CHECK(w_text.substr(0, 2) == "4\n");
  CHECK(w_text.find('a') == std::string::npos);
  CHECK(parse_table(w_text) == fixture("W"));

  const std::string ex2_text = format_table(fixture("EX2_PRINTED"));
  CHECK(ex2_text.find("a b 1 x") != std::string::npos);
  const Magma round = parse_table(ex2_text);
  CHECK(round == fixture("EX2_PRINTED"));
  CHECK(*round.names() == *fixture("EX2_PRINTED").names());
}

TEST_CASE("round trip on fixtures and random tables") {
  for (const auto& [name, m] : bundled_fixtures())
    CHECK(parse_table(format_table(m)) == m);

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = 1 + trial % 6;
    std::uniform_int_distribution<int> value(0, order - 1);
    std::vector<Element> table(static_cast<std::size_t>(order) * order);
    for (auto& v : table) v = value(rng);
    const Magma m(order, table);
    CHECK(parse_table(format_table(m)) == m);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_table(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("x\n0\n") == 1);                      // malformed header
  CHECK(line_of("2 2\n0 0\n1 1\n") == 1);             // header not a single int
  CHECK(line_of("2\n0 0\n") == 2);                    // missing row
  CHECK(line_of("2\n0 0 0\n1 1\n") == 2);             // wrong row width
  CHECK(line_of("2\n0 q\n1 1\n") == 2);               // unknown symbol
  CHECK(line_of("2\n0 2\n1 1\n") == 2);               // entry out of range
  CHECK(line_of("2\na a\n0 0\n1 1\n") == 2);          // duplicate name
  CHECK(line_of("2\n0 0\n1 1\n0 0\n") == 4);          // trailing content
  CHECK(line_of("2\na b c\n0 0\n1 1\n") == 2);        // wrong name count
}
