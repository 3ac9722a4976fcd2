#include <doctest.h>

#include <fstream>
#include <iterator>
#include <random>

#include "josephus/error.hpp"
#include "josephus/literate.hpp"
#include "listings.hpp"

using namespace josephus;
using namespace josephus::literate;

namespace {

std::string read_web(const std::string& name) {
  std::ifstream f(std::string(JOSEPHUS_WEB_DIR) + "/" + name, std::ios::binary);
  REQUIRE(f);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

}  // namespace

TEST_CASE("parse: empty input") {
  auto doc = parse("");
  CHECK(doc.chunks.empty());
  CHECK(doc.blocks.empty());
  CHECK(list_chunks(doc).empty());
}

TEST_CASE("parse: bundled romans.py.web") {
  auto doc = parse(read_web("romans.py.web"));
  REQUIRE(doc.chunks.size() == 2);
  CHECK(doc.chunks.at("Procedures for data manipulation").ordinal == 1);
  CHECK(doc.chunks.at("The main program").ordinal == 2);
  auto rows = list_chunks(doc);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].name == "Procedures for data manipulation");
  CHECK(rows[1].name == "The main program");
  REQUIRE(rows[0].references.size() == 1);
  CHECK(rows[0].references[0].from_chunk == "The main program");
  CHECK(rows[1].references.empty());
}

TEST_CASE("parse: definitions and references record line numbers") {
  auto doc = parse("intro\n<<A>>=\nx\n<<B>>\n@\nmore prose\n<<B>>=\ny\n@\n");
  CHECK(doc.chunks.at("A").definition_lines == std::vector<std::size_t>{2});
  CHECK(doc.chunks.at("B").definition_lines == std::vector<std::size_t>{7});
  REQUIRE(doc.chunks.at("B").referenced_from.size() == 1);
  CHECK(doc.chunks.at("B").referenced_from[0].line == 4);
  CHECK(doc.blocks.size() == 4);
}

TEST_CASE("parse: repeated definitions append") {
  auto doc = parse("<<A>>=\none\n@\n<<A>>=\ntwo\n@\n");
  REQUIRE(doc.chunks.size() == 1);
  CHECK(doc.chunks.at("A").lines == std::vector<std::string>{"one", "two"});
  auto rows = list_chunks(doc);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].definition_lines == std::vector<std::size_t>{1, 4});
  CHECK(tangle(doc, "A") == "one\ntwo\n");
}

TEST_CASE("parse: names are trimmed and case-sensitive") {
  auto doc = parse("<<  Main  >>=\n<< helper>>\n@\n<<helper >>=\nh\n@\n<<Helper>>=\nH\n@\n");
  CHECK(doc.chunks.count("Main") == 1);
  CHECK(doc.chunks.count("helper") == 1);
  CHECK(doc.chunks.count("Helper") == 1);
  CHECK(tangle(doc, "Main") == "h\n");
}

TEST_CASE("parse: malformed headers") {
  CHECK_THROWS_AS(parse("<<Broken=\ncode\n@\n"), ParseError);
  CHECK_THROWS_AS(parse("<<Broken>=\n"), ParseError);
  CHECK_THROWS_AS(parse("<<>>=\n"), ParseError);
  try {
    parse("prose\n\n<<Broken=\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse: references in prose are ignored") {
  auto doc = parse("see <<Nowhere>> for details\n<<A>>=\na\n@\n");
  CHECK(doc.undefined.empty());
  CHECK(doc.chunks.at("A").referenced_from.empty());
}

TEST_CASE("parse: undefined references fail at tangle time") {
  auto doc = parse("<<A>>=\n<<B>>\n@\n");
  CHECK(doc.undefined.count("B") == 1);
  CHECK_THROWS_AS(tangle(doc, "A"), TangleError);
  try {
    tangle(doc, "A");
  } catch (const TangleError& e) {
    std::string msg = e.what();
    CHECK(msg.find("<<B>>") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
  }
}

TEST_CASE("tangle: verbatim single chunk") {
  auto doc = parse("<<A>>=\n  x = 1\n\ty\n@\n");
  CHECK(tangle(doc, "A") == "  x = 1\n\ty\n");
}

TEST_CASE("tangle: cycles are reported with their path") {
  auto self = parse("<<A>>=\n<<A>>\n@\n");
  CHECK_THROWS_AS(tangle(self, "A"), TangleError);
  try {
    tangle(self, "A");
  } catch (const TangleError& e) {
    CHECK(std::string(e.what()).find("A -> A") != std::string::npos);
  }
  auto loop = parse("<<A>>=\n<<B>>\n@\n<<B>>=\n<<C>>\n@\n<<C>>=\n<<A>>\n@\n");
  try {
    tangle(loop, "A");
    FAIL("expected a cycle");
  } catch (const TangleError& e) {
    CHECK(std::string(e.what()).find("A -> B -> C -> A") != std::string::npos);
  }
  CHECK_THROWS_AS(tangle(loop, "Missing"), TangleError);
}

TEST_CASE("tangle: bundled listings are byte-exact") {
  CHECK(tangle(parse(read_web("romans.py.web")), "The main program") == listings::kRomansPy);
  CHECK(tangle(parse(read_web("romans.hs.web")), "romans.hs") == listings::kRomansHs);
}

TEST_CASE("tangle: exactly one trailing newline") {
  CHECK(tangle(parse("<<A>>=\nx\n\n\n@\n"), "A") == "x\n");
  CHECK(tangle(parse("<<A>>=\nx"), "A") == "x\n");
}

TEST_CASE("tangle: text around a reference") {
  auto doc = parse("<<A>>=\nf(<<args>>);\n@\n<<args>>=\na,\nb\n@\n");
  CHECK(tangle(doc, "A") == "f(a,\n  b);\n");
}

TEST_CASE("tangle: nested indentation accumulates") {
  auto doc = parse("<<A>>=\ndef f():\n    <<B>>\n@\n<<B>>=\nif x:\n    <<C>>\n@\n<<C>>=\nreturn 1\nreturn 2\n@\n");
  CHECK(tangle(doc, "A") ==
        "def f():\n    if x:\n        return 1\n        return 2\n");
}

TEST_CASE("tangle properties on generated documents") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    // Chunk i may only reference chunks with larger i, so the web is acyclic.
    const int count = 1 + static_cast<int>(rng() % 5);
    std::string src;
    std::vector<std::size_t> indent(static_cast<std::size_t>(count), 0);
    for (int i = count - 1; i >= 0; --i) {
      src += "Prose for chunk " + std::to_string(i) + "\n";
      src += "<<c" + std::to_string(i) + ">>=\n";
      const int lines = 1 + static_cast<int>(rng() % 3);
      for (int l = 0; l < lines; ++l) {
        if (i + 1 < count && rng() % 2 == 0) {
          const std::size_t w = rng() % 6;
          src += std::string(w, ' ') + "<<c" + std::to_string(i + 1) + ">>\n";
        } else {
          src += "line " + std::to_string(i) + "." + std::to_string(l) + "\n";
        }
      }
      src += "@\n";
    }
    auto doc = parse(src);
    auto once = tangle(doc, "c0");
    CHECK(once == tangle(parse(src), "c0"));
    CHECK(once.find("<<") == std::string::npos);
    CHECK(once.find(">>") == std::string::npos);
    CHECK(once.back() == '\n');
    CHECK(once.find("\n\n") == std::string::npos);

    std::vector<std::size_t> ordinals;
    for (const auto& row : list_chunks(doc)) ordinals.push_back(row.ordinal);
    for (std::size_t k = 0; k < ordinals.size(); ++k) CHECK(ordinals[k] == k + 1);
  }
}

TEST_CASE("tangle: indentation prefixes every spliced line") {
  for (std::size_t w = 0; w <= 8; ++w) {
    std::string src = "<<A>>=\n" + std::string(w, ' ') + "<<B>>\n@\n<<B>>=\none\n two\n\nthree\n@\n";
    std::string expect;
    for (std::string line : {"one", " two", "", "three"}) expect += std::string(w, ' ') + line + "\n";
    CHECK(tangle(parse(src), "A") == expect);
  }
}

TEST_CASE("weave: empty document") {
  CHECK(weave(parse("")) == "## Chunk index\n");
}

TEST_CASE("weave: bundled romans.py.web") {
  auto md = weave(parse(read_web("romans.py.web")));
  CHECK(md.find("**Note 1.** ⟨Procedures for data manipulation 1⟩ ≡") != std::string::npos);
  CHECK(md.find("**Note 2.** ⟨The main program 2⟩ ≡") != std::string::npos);
  CHECK(md.find("```\n⟨Procedures for data manipulation 1⟩\n") != std::string::npos);
  CHECK(md.find("- ⟨Procedures for data manipulation 1⟩: defined at line 16; referenced by "
                "⟨The main program 2⟩ (line 33)") != std::string::npos);
  CHECK(md.find("- ⟨The main program 2⟩: defined at line 32; not referenced") != std::string::npos);
  CHECK(md.find("Carnage Maximus") != std::string::npos);
}

TEST_CASE("weave: continuations and undefined references") {
  auto md = weave(parse("<<A>>=\n<<Ghost>>\n@\n<<A>>=\nmore\n@\n"));
  CHECK(md.find("**Note 1.** ⟨A 1⟩ ≡") != std::string::npos);
  CHECK(md.find("**Note 1.** ⟨A 1⟩ +≡") != std::string::npos);
  CHECK(md.find("⟨Ghost ?⟩") != std::string::npos);
  CHECK(md.find("- ⟨Ghost⟩: UNDEFINED; referenced by ⟨A 1⟩ (line 2)") != std::string::npos);
}

TEST_CASE("find_references") {
  auto refs = find_references("  x << 2; <<A>> + <<B >>");
  REQUIRE(refs.size() == 2);
  CHECK(refs[0].name == "A");
  CHECK(refs[1].name == "B");
  CHECK(find_references("std::cout << x;").empty());
}
