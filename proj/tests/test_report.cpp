#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "pfvs/pfvs.hpp"

using namespace pfvs;

TEST_CASE("record line building") {
  Record r;
  r.set("event", "solve");
  r.set("n", 12);
  r.set("tau_star", Rat(5, 9));
  r.set("ok", true);
  r.set("note", "two words");
  REQUIRE(r.line() ==
          "event=solve n=12 tau_star=5/9 ok=1 note=two%20words");
  REQUIRE(r.find("n") != nullptr);
  REQUIRE(*r.find("n") == "12");
  REQUIRE(r.find("absent") == nullptr);
}

TEST_CASE("value escaping round trips") {
  for (const std::string& raw :
       {std::string("plain"), std::string("with space"),
        std::string("percent%sign"), std::string("tab\tand\nnewline"),
        std::string("cr\rend"), std::string(""), std::string("%20")}) {
    std::string enc = escape_value(raw);
    REQUIRE(enc.find(' ') == std::string::npos);
    REQUIRE(enc.find('\n') == std::string::npos);
    REQUIRE(enc.find('\t') == std::string::npos);
    REQUIRE(enc.find('\r') == std::string::npos);
    REQUIRE(unescape_value(enc, 1) == raw);
  }
  REQUIRE(escape_value("a b") == "a%20b");
  REQUIRE(escape_value("50%") == "50%25");
}

TEST_CASE("bad keys are rejected") {
  Record r;
  REQUIRE_THROWS_AS(r.set("Bad Key", "x"), Error);
  REQUIRE_THROWS_AS(r.set("", "x"), Error);
  REQUIRE_THROWS_AS(r.set("UPPER", "x"), Error);
  r.set("fine-key_1.z", "x");
}

TEST_CASE("writer and parser round trip") {
  std::ostringstream out;
  RecordWriter w(out);
  Record a;
  a.set("event", "solve");
  a.set("file", "dir/with space.pdg");
  w.write(a);
  Record b;
  b.set("event", "sweep");
  b.set("ratio", Rat(4, 3));
  w.write(b);
  w.finish();

  std::string text = out.str();
  REQUIRE(text.substr(0, std::string(kRecordHeader).size()) == kRecordHeader);
  auto records = parse_records_string(text);
  REQUIRE(records.size() == 2);
  REQUIRE(*records[0].find("event") == "solve");
  REQUIRE(*records[0].find("file") == "dir/with space.pdg");
  REQUIRE(*records[1].find("ratio") == "4/3");

  // Writing the parse result again reproduces the bytes.
  std::ostringstream out2;
  RecordWriter w2(out2);
  for (const Record& r : records) w2.write(r);
  w2.finish();
  REQUIRE(out2.str() == text);
}

TEST_CASE("an empty stream still carries the header") {
  std::ostringstream out;
  RecordWriter w(out);
  w.finish();
  REQUIRE(out.str() == std::string(kRecordHeader) + "\n");
  REQUIRE(parse_records_string(out.str()).empty());
}

TEST_CASE("parser tolerates comments and blank lines") {
  std::string text = std::string(kRecordHeader) +
                     "\n\n# a comment\nevent=x a=1\n\nevent=y b=2\n";
  auto records = parse_records_string(text);
  REQUIRE(records.size() == 2);
  REQUIRE(*records[1].find("b") == "2");
}

TEST_CASE("parser diagnostics name their line") {
  auto fails = [](const std::string& text, const std::string& needle) {
    try {
      parse_records_string(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  fails("", "header");
  fails("wrong header\n", "header");
  std::string h(kRecordHeader);
  fails(h + "\nnoequals\n", "line 2");
  fails(h + "\na=1\nBad=2\n", "line 3");
  fails(h + "\na=%2x\n", "line 2");
  fails(h + "\na=%2\n", "line 2");
  fails(h + "\n=value\n", "line 2");
}

TEST_CASE("crlf input parses") {
  std::string text = std::string(kRecordHeader) + "\r\nevent=x a=b\r\n";
  auto records = parse_records_string(text);
  REQUIRE(records.size() == 1);
  REQUIRE(*records[0].find("a") == "b");
}
