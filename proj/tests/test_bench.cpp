// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ptheta/bench.hpp"

using namespace ptheta;

TEST_CASE("constant reproduction table")
{
    auto items = bench_run_all(128, 1);
    REQUIRE(items.size() > 40);

    std::map<std::string, bool> by_id;
    for (const auto& it : items) {
        CAPTURE(it.id);
        CHECK(by_id.find(it.id) == by_id.end()); // ids unique
        by_id[it.id] = it.pass;
    }

    // sorted by id
    for (size_t i = 1; i < items.size(); i++) CHECK(items[i - 1].id < items[i].id);

    // Four printed constants do not survive 512-bit recomputation at two
    // units of their last digit (the recomputed values are carried in the
    // item descriptions); everything else must pass.
    const std::set<std::string> known_red = {"lemma4-v2", "lm0306-thetaI", "lm1w-h3",
                                            "lm1w-h3h4"};
    for (const auto& it : items) {
        CAPTURE(it.id);
        CAPTURE(it.computed);
        CAPTURE(it.expected);
        if (known_red.count(it.id)) {
            CHECK(!it.pass);
        } else {
            CHECK(it.pass);
        }
    }
    CHECK(!bench_all_pass(items));

    // spot presence of the normative anchors
    for (const char* id :
         {"area-ratio", "lm051-R", "lm051-lambda", "lm051-maxq-val", "lm051-prod100",
          "lm051-g05", "lm0751-h1", "lm0751-h1h2", "lm0306-thetaI", "lm1w-h3h4",
          "prop2-theta15-lo", "prop2-K-t1", "prop2-K-d2", "prop5-tail", "prop5-GR-q05",
          "prop5-U-q05", "prop5-SI-q05", "lm01-TI0", "lm01-TI2", "lemma3-G",
          "lemma4-Gstar-sup", "arc-small-value", "eq3-identity", "derived-theta-half-one"}) {
        CAPTURE(id);
        CHECK(by_id.count(id) == 1);
    }
}

TEST_CASE("TSV shape and determinism")
{
    auto items = bench_run_all(128, 1);
    std::string tsv = bench_to_tsv(items);
    CHECK(tsv.rfind("id\tcomputed\texpected\ttol\tstatus\n", 0) == 0);
    auto again = bench_to_tsv(bench_run_all(128, 2));
    CHECK(tsv == again);
}
