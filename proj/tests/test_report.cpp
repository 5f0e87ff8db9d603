#include "doctest.h"

#include <stdexcept>

#include "ptelab/report.hpp"

using ptelab::CheckReport;
using ptelab::from_jsonl;
using ptelab::to_jsonl;
using ptelab::to_text;

TEST_SUITE("report") {

TEST_CASE("aggregation") {
    CheckReport r;
    CHECK(r.all_pass());
    r.add("alpha", "n=2", true);
    CHECK(r.all_pass());
    r.add("beta", "n=3", false, "witness");
    CHECK_FALSE(r.all_pass());

    CheckReport other;
    other.add("gamma", "", true);
    r.merge(other);
    CHECK(r.records.size() == 3);
    CHECK(r.records[2].name == "gamma");
}

TEST_CASE("text rendering") {
    CheckReport r;
    r.add("alpha", "n=2", true);
    r.add("beta", "n=3", false, "bad value");
    r.add("gamma", "k=1", true, "note");
    auto text = to_text(r);
    CHECK(text == "ok alpha (n=2)\n"
                  "FAIL beta (n=3): bad value\n"
                  "ok gamma (k=1) [note]\n");
}

TEST_CASE("jsonl round trip") {
    CheckReport r;
    r.add("alpha", "n=2,k=1", true, "value 3/2");
    r.add("beta", "quoted \"text\" and\nnewline", false, "detail with, commas");
    auto line = to_jsonl(r);
    auto back = from_jsonl(line);
    REQUIRE(back.records.size() == r.records.size());
    for (std::size_t i = 0; i < r.records.size(); ++i)
        CHECK(back.records[i] == r.records[i]);
}

TEST_CASE("malformed jsonl is rejected") {
    CHECK_THROWS_AS(from_jsonl("not json\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_jsonl("{\"name\":1}\n"), std::invalid_argument);
}

}  // TEST_SUITE
