#pragma once

// Check records and report envelopes shared by the verification drivers and
// the command-line tool.  A record is one verified identity: its name, the
// citation key of the identity being checked, a pass/fail/n-a status, and a
// witness (the counterexample for failures, context for informational
// records).  Reports serialize to stable JSON: same command and seed, same
// bytes.

#include <string>
#include <vector>

#include "qsp/rational.hpp"

namespace qsp {

struct CheckRecord {
    std::string name;
    std::string paper_eq;  // citation key; empty for engine-internal checks
    std::string status;    // "pass", "fail", or "n/a"
    std::string witness;   // required when status == "fail"

    static CheckRecord pass(std::string name, std::string eq, std::string witness = "") {
        return {std::move(name), std::move(eq), "pass", std::move(witness)};
    }
    static CheckRecord fail(std::string name, std::string eq, std::string witness) {
        return {std::move(name), std::move(eq), "fail", std::move(witness)};
    }
    static CheckRecord info(std::string name, std::string eq, std::string witness) {
        return {std::move(name), std::move(eq), "n/a", std::move(witness)};
    }
    static CheckRecord of(bool ok, std::string name, std::string eq, std::string witness) {
        return ok ? pass(std::move(name), std::move(eq))
                  : fail(std::move(name), std::move(eq), std::move(witness));
    }
};

struct Report {
    std::string command;
    std::string family;
    Bindings bindings;
    uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    bool any_failed() const;
    void append(std::vector<CheckRecord> more);

    std::string to_json() const;  // fields: schema, command, family, bindings, seed, checks
    std::string to_text() const;  // aligned human-readable listing
};

}  // namespace qsp
