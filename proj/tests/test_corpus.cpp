#include "centilink/corpus.hpp"

#include <fstream>
#include <sstream>

#include "centilink/text.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace centilink;

namespace {

std::vector<RawPage> parse_all(const std::string& text) {
  std::istringstream in(text);
  CorpusReader reader(in);
  std::vector<RawPage> pages;
  RawPage page;
  while (reader.next(page)) pages.push_back(page);
  return pages;
}

}  // namespace

TEST_CASE("normalize_mention folds case and collapses whitespace") {
  CHECK(normalize_mention("Sun") == "sun");
  CHECK(normalize_mention("sun") == "sun");
  CHECK(normalize_mention("  The   Sun \t Rises ") == "the sun rises");
  CHECK(normalize_mention("Sun_Microsystems") == "sun_microsystems");
  CHECK(normalize_mention("") == "");
  CHECK(normalize_mention("   ") == "");
  // Non-ASCII bytes pass through untouched.
  CHECK(normalize_mention("Ámbito") == "\xc3\x81mbito");
}

TEST_CASE("single page record with one outlink") {
  const auto pages = parse_all("#PAGE\tSun_Microsystems\nOracle\tOracle_Corporation\n\n");
  REQUIRE(pages.size() == 1);
  CHECK(pages[0].title == "Sun_Microsystems");
  REQUIRE(pages[0].outlinks.size() == 1);
  CHECK(pages[0].outlinks[0].anchor == "Oracle");
  CHECK(pages[0].outlinks[0].target == "Oracle_Corporation");
}

TEST_CASE("empty source yields an empty stream, not an error") {
  CHECK(parse_all("").empty());
  CHECK(parse_all("\n\n\n").empty());
}

TEST_CASE("final record may be terminated by end of input") {
  const auto pages = parse_all("#PAGE\tA\nx\tB");
  REQUIRE(pages.size() == 1);
  CHECK(pages[0].outlinks.size() == 1);
}

TEST_CASE("three page fixture parses to the hand-enumerated outlink multiset") {
  std::ifstream in(testutil::data_dir() / "corpus_3page.txt");
  REQUIRE(in.good());
  CorpusReader reader(in);
  std::vector<RawPage> pages;
  RawPage page;
  while (reader.next(page)) pages.push_back(page);

  REQUIRE(pages.size() == 3);
  CHECK(pages[0].title == "Sun_Microsystems");
  REQUIRE(pages[0].outlinks.size() == 4);
  CHECK(pages[0].outlinks[2].anchor == "Java");
  CHECK(pages[0].outlinks[2].target == "Java_(programming_language)");
  CHECK(pages[0].outlinks[3].target == "Java_(island)");
  CHECK(pages[1].title == "Java_(programming_language)");
  REQUIRE(pages[1].outlinks.size() == 2);
  CHECK(pages[1].outlinks[0].anchor == "java");
  CHECK(pages[1].outlinks[0].target == "Java_(programming_language)");
  CHECK(pages[2].title == "Java_(island)");
  CHECK(pages[2].outlinks.empty());
  CHECK(reader.records_read() == 3);
}

TEST_CASE("malformed records carry byte offset and record index") {
  SUBCASE("empty title") {
    std::istringstream in("#PAGE\t\n");
    CorpusReader reader(in);
    RawPage page;
    CHECK_THROWS_AS(reader.next(page), CorpusParseError);
  }
  SUBCASE("outlink with empty target") {
    std::istringstream in("#PAGE\tA\nanchor\t\n\n");
    CorpusReader reader(in);
    RawPage page;
    CHECK_THROWS_AS(reader.next(page), CorpusParseError);
  }
  SUBCASE("line without separator") {
    std::istringstream in("#PAGE\tA\njust-some-text\n\n");
    CorpusReader reader(in);
    RawPage page;
    CHECK_THROWS_AS(reader.next(page), CorpusParseError);
  }
  SUBCASE("outlink outside a record") {
    std::istringstream in("anchor\tTarget\n");
    CorpusReader reader(in);
    RawPage page;
    CHECK_THROWS_AS(reader.next(page), CorpusParseError);
  }
  SUBCASE("missing blank line between records") {
    std::istringstream in("#PAGE\tA\n#PAGE\tB\n");
    CorpusReader reader(in);
    RawPage page;
    CHECK_THROWS_AS(reader.next(page), CorpusParseError);
  }
  SUBCASE("offset and record index point at the failing line") {
    // 8 bytes for "#PAGE\tA\n", record 0 already complete, error at byte 9.
    std::istringstream in("#PAGE\tA\n\nbroken-line\n");
    CorpusReader reader(in);
    RawPage page;
    REQUIRE(reader.next(page));
    try {
      reader.next(page);
      FAIL("expected CorpusParseError");
    } catch (const CorpusParseError& e) {
      CHECK(e.byte_offset == 9);
      CHECK(e.record_index == 1);
      CHECK(std::string(e.what()).find("byte offset 9") != std::string::npos);
    }
  }
}

TEST_CASE("compute_stats counts pages, links, and distinct normalized surfaces") {
  SUBCASE("empty stream") {
    std::istringstream in("");
    const CorpusStats stats = compute_stats(in);
    CHECK(stats.pages == 0);
    CHECK(stats.pages_with_links == 0);
    CHECK(stats.mention_pairs == 0);
    CHECK(stats.distinct_mentions == 0);
  }
  SUBCASE("two pages, one with three outlinks over two distinct anchors") {
    std::istringstream in(
        "#PAGE\tAlpha\n"
        "x\tBeta\n"
        "x\tGamma\n"
        "y\tBeta\n"
        "\n"
        "#PAGE\tBeta\n");
    const CorpusStats stats = compute_stats(in);
    CHECK(stats.pages == 2);
    CHECK(stats.pages_with_links == 1);
    CHECK(stats.mention_pairs == 5);  // 3 outlinks + 2 title pairs
    CHECK(stats.distinct_mentions == 4);  // alpha, beta, x, y
  }
  SUBCASE("invariants hold on the fixture corpus") {
    std::ifstream in(testutil::data_dir() / "corpus_3page.txt");
    const CorpusStats stats = compute_stats(in);
    CHECK(stats.pages == 3);
    CHECK(stats.pages_with_links == 2);
    CHECK(stats.mention_pairs == 9);
    CHECK(stats.distinct_mentions == 7);
    CHECK(stats.pages_with_links <= stats.pages);
    CHECK(stats.distinct_mentions <= stats.mention_pairs);
  }
}

TEST_CASE("collect_titles gathers every page title") {
  std::istringstream in("#PAGE\tA\nx\tB\n\n#PAGE\tC\n");
  const auto titles = collect_titles(in);
  CHECK(titles.size() == 2);
  CHECK(titles.contains("A"));
  CHECK(titles.contains("C"));
}
