#pragma once

#include <string>

namespace pienc {

struct VerifyResult {
    bool all_passed = false;
    std::string report; // one PASS/FAIL line per property plus a summary line
};

// Runs every module's invariants at fixed small sizes. With inject_disjoint a
// fabricated enclosure that cannot contain pi joins the cross-check inputs,
// which must make that property fail (the negative-path contract).
VerifyResult run_verify(bool inject_disjoint);

} // namespace pienc
