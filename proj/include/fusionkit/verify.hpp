#pragma once

// Named, reproducible checks with JSON reports. Each check recomputes every
// number it asserts; cited facts that are not recomputed are listed under
// the "input_data" key of the report details.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fusionkit/pcgroup.hpp"
#include "fusionkit/perm.hpp"

namespace fusionkit::verify {

using Json = nlohmann::json;

enum class Status { Pass, Fail, Error };
std::string_view to_string(Status s);

struct CheckReport {
  std::string check_id;
  Status status = Status::Error;
  Json details = Json::object();
  std::int64_t elapsed_ms = 0;
  std::optional<std::uint64_t> seed;

  Json to_json() const;
  /// Report without the elapsed_ms field, for determinism comparisons.
  Json to_json_untimed() const;
};

CheckReport check_lemma31(std::uint64_t seed);
CheckReport check_lemma32_scenarios(std::uint64_t seed);
CheckReport check_lemma33(pc::SylowKind kind);
/// base: "a6" or "l32".
CheckReport check_wreath_model(std::string_view base);
CheckReport check_fusion_axioms(const perm::PermGroup& g);
/// Every corrupted variant must fail; passes iff they all do.
CheckReport negative_controls(std::uint64_t seed);

// Corrupted variants, exposed for tests.
/// One generator of the A7-image replaced by the identity.
CheckReport check_lemma31_corrupted(std::uint64_t seed);
/// Homocyclic exclusion attempted with a (2,3,2) triangle pair in GL2(2).
CheckReport check_lemma32_corrupted();
/// The L34 presentation with [a1,b1] = 1.
CheckReport check_lemma33_corrupted();
/// Wreath check with the swap replaced by a diagonal involution.
CheckReport check_wreath_corrupted(std::string_view base);
/// Oracle equivalence against conjugation by S only, on S4.
CheckReport check_fusion_corrupted();

perm::PermGroup builtin_group(std::string_view name);  // s4, d8, a6, l32

struct CheckEntry {
  std::string id;
  std::function<CheckReport()> run;
};
/// Every check in report order.
std::vector<CheckEntry> registry(std::uint64_t seed);

/// Runs the registry (filtered by `only`, an exact id or the part before
/// ':'), concurrently, in fixed order. Throws Parse for an unknown filter.
std::vector<CheckReport> run_checks(std::uint64_t seed, const std::optional<std::string>& only = {});

/// 0 if all pass, 1 if any fail, 2 if any errored.
int exit_code(const std::vector<CheckReport>& reports);

/// Writes the JSON array and returns the exit code; 2 on I/O failure.
int run_all(std::uint64_t seed, const std::string& output,
            const std::optional<std::string>& only = {});

}  // namespace fusionkit::verify
