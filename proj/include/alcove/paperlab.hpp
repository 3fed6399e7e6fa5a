#ifndef ALCOVE_PAPERLAB_HPP
#define ALCOVE_PAPERLAB_HPP

// Registry of checkable claims and their verifiers.

#include "alcove/io.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove::lab {

enum class Status { Verified, Refuted, Skipped, ResourceCapped };

std::string to_string(Status s);

class UnknownClaim : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Optional overrides; claims that take no parameters ignore them.
struct Params {
    std::optional<CartanType> type;
    std::optional<Rational> lambda;
    std::optional<Rational> mu;
};

struct RunOptions {
    bool max_effort = false;
    /// When false every elapsed_ms is reported as 0, for byte-identical reports.
    bool timing = true;
    Params params;
};

struct Outcome {
    Status status = Status::Verified;
    std::string witness;
    io::Json details = io::Json::object();
};

struct Claim {
    std::string id;
    std::string description;
    std::string location;
    std::function<Outcome(const RunOptions&)> verifier;
};

struct ClaimResult {
    std::string id;
    Status status = Status::Verified;
    std::string witness;
    io::Json details = io::Json::object();
    std::int64_t elapsed_ms = 0;
};

const std::vector<Claim>& claim_registry();
const Claim& find_claim(const std::string& id);

/// Runs one verifier. Resource caps become ResourceCapped and failed internal
/// verifications become Refuted; invalid parameters propagate as exceptions.
ClaimResult verify(const std::string& id, const RunOptions& options = {});
std::vector<ClaimResult> verify_all(const RunOptions& options = {});

/// True unless some result is Refuted.
bool all_passed(const std::vector<ClaimResult>& results);

/// { id, status, witness?, elapsed_ms, ...details }
io::Json to_json(const ClaimResult& r);
/// { claims: [...] }
io::Json report_json(const std::vector<ClaimResult>& results);

} // namespace alcove::lab

#endif // ALCOVE_PAPERLAB_HPP
