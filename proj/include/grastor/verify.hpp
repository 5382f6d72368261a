#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grastor/json_io.hpp"

namespace grastor {

struct RunConfig {
    uint32_t p = 2;
    bool ext = false;  // quadratic extension with conjugation
    size_t n = 2;      // ambient dimension
    uint64_t samples = 1000;
    uint64_t seed = 1;
    int exhaustive = -1;  // -1 auto by cardinality, 0 force sampled, 1 force exhaustive
    uint64_t limit = default_enumeration_limit();
    unsigned workers = 0;  // 0 = hardware concurrency
    std::string form = "symplectic";

    Ring ring() const { return ext ? Ring::gf2(p) : Ring::gf(p); }
    StandardFamily form_family() const;
};

struct VerifyResult {
    std::string suite;
    bool passed = true;
    uint64_t checked = 0;
    json failures = json::array();  // first counterexamples, fully serialized
    json notes = json::object();
    json to_json() const;
};

std::vector<std::string> suite_names();
VerifyResult run_suite(const std::string& name, const RunConfig& cfg);

// Deterministic sharded sweep: fn(i) returns a serialized counterexample for
// a failing index. Aggregation is order independent; the reported failures
// are the lowest failing indices.
struct SweepOutcome {
    uint64_t checked = 0;
    std::vector<std::pair<uint64_t, json>> failures;
};
SweepOutcome sweep(uint64_t total, unsigned workers,
                   const std::function<std::optional<json>(uint64_t)>& fn);

// Per-index deterministic stream, independent of sharding.
Rng index_rng(uint64_t seed, uint64_t index);

}  // namespace grastor
