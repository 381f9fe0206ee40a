#pragma once

#include "milnor/group.hpp"

#include <cstdint>

namespace milnor {

/// One checked statement. id names the anchor of the expected value in the
/// source text (or "plumbing" for artifact-internal checks); provenance is
/// PAPER, TRIVIAL or DERIVED; status is PASS, FAIL or SKIP.
struct Assertion {
    std::string id;
    std::string provenance;
    std::string computed;
    std::string expected;
    std::string status;
};

struct Report {
    static constexpr const char* schema_version = "1";
    std::string command;
    std::vector<std::string> notes;
    std::vector<Assertion> assertions;
    long duration_ms = 0;

    bool pass() const;      // no FAIL entries
    bool has_skip() const;

    /// Append a PASS/FAIL line comparing computed against expected.
    void check(const std::string& id, const std::string& provenance,
               const std::string& computed, const std::string& expected);
    void check_bool(const std::string& id, const std::string& provenance, bool ok,
                    const std::string& detail = "holds");
    void skip(const std::string& id, const std::string& why);

    /// Absorb a sub-report, prefixing assertion ids with the sub-command.
    void merge(const Report& sub);

    std::string text(bool with_duration = true) const;
    std::string json(bool with_duration = true) const;
};

/// Force the first assertion whose id contains needle to FAIL; returns false
/// when nothing matches. Exercises the failure path end to end.
bool inject_fault(Report& report, const std::string& needle);

Report cmd_tpqr(long p, long q, long r);
Report cmd_exceptional(const std::string& name);
Report cmd_lemma42(long m, long l, const Int& target);
Report cmd_gamma(long p, long q, long r, long bound, long samples, std::uint64_t seed);
Report cmd_kaenders();
Report cmd_all(std::uint64_t seed);

/// Seeded generator words in [[1,1],[0,1]] and [[0,-1],[1,0]]; the RNG is
/// splitmix64 as documented in the README.
std::vector<SL2Matrix> sl2_words(long samples, std::uint64_t seed);

/// All SL(2,Z) matrices with entries in [-bound, bound], lexicographic.
std::vector<SL2Matrix> sl2_box(long bound);

}  // namespace milnor
