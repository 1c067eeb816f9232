#pragma once

#include <functional>
#include <string>
#include <vector>

namespace palintiple {

// One frozen worked example. observe() recomputes the quantity from scratch;
// the fixture passes iff the observed string equals expected byte for byte.
struct Fixture {
    std::string id;
    int section;       // grouping key for the --section filter
    std::string description;
    std::string expected;
    bool long_running = false; // skipped unless explicitly enabled
    std::function<std::string()> observe;
};

const std::vector<Fixture>& fixture_corpus();

struct FixtureOutcome {
    const Fixture* fixture = nullptr;
    std::string observed;
    bool skipped = false;
    bool passed = false;
};

struct CorpusFilter {
    int section = 0;          // 0 = every section
    bool include_long = false;
    std::string inject_fault; // id whose expectation gets deliberately corrupted
};

// Corrupt a frozen expectation: the last alphanumeric character is bumped to
// the next value in its class. Used by the fault-injection self test.
std::string corrupt_expectation(const std::string& expected);

std::vector<FixtureOutcome> run_fixtures(const CorpusFilter& filter = {});

} // namespace palintiple
