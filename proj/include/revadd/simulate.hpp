#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revadd/circuit.hpp"

namespace revadd {

inline constexpr std::size_t kDefaultExhaustiveBound = 16;
inline constexpr std::uint64_t kDefaultSamples = 100'000;
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Named bit assignment (primary inputs in, output labels out).
using Assignment = std::map<std::string, bool, std::less<>>;

/// Runs all gates on a word; requires width <= 64.
Word simulate_word(const Circuit& circuit, Word input);
/// Runs all gates on an arbitrary-width state.
BitState simulate_state(const Circuit& circuit, BitState state);

/// Assigns every primary input by name (ancillas take their constants), runs the
/// circuit, and returns every output bit keyed by its output label. Throws
/// std::invalid_argument for missing or unknown input names.
Assignment simulate(const Circuit& circuit, const Assignment& primary_inputs);

/// Explicit map of all 2^width input words.
struct TruthTable {
  std::size_t width = 0;
  std::vector<Word> mapping;

  Word operator()(Word input) const { return mapping.at(input); }
  bool is_permutation() const;
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// Exhaustive table ignoring line roles. Throws std::invalid_argument if
/// width > bound (the message names the bound).
TruthTable truth_table(const Circuit& circuit, std::size_t bound = kDefaultExhaustiveBound);

/// A group of lines read as an unsigned integer, least significant bit first.
/// `limit` (exclusive) restricts input fields to a value range; 0 means 2^bits.
struct Field {
  std::string name;
  std::vector<std::string> bits;
  std::uint64_t limit = 0;
};

/// Reference behaviour attached to a circuit: input fields name primary inputs,
/// output fields name output labels. `eval` returns the expected output field
/// values, or nullopt for points outside the function's domain.
struct FunctionalSpec {
  std::string name;
  std::vector<Field> inputs;
  std::vector<Field> outputs;
  std::function<std::optional<std::vector<std::uint64_t>>(std::span<const std::uint64_t>)> eval;
};

struct CheckOptions {
  std::size_t exhaustive_bound = kDefaultExhaustiveBound;  // log2 of the largest exhaustive domain
  std::uint64_t samples = kDefaultSamples;                 // used when the domain is larger
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_recorded = 64;
};

struct RoleViolation {
  enum class Kind { Regeneration, Specification };
  Kind kind = Kind::Regeneration;
  Line line = 0;
  std::string output;  // output label of the offending line
  std::string inputs;  // rendering of the failing input point
  bool expected = false;
  bool actual = false;
};

struct RoleCheckResult {
  std::vector<RoleViolation> violations;  // first `max_recorded` violations
  std::uint64_t violation_count = 0;
  std::uint64_t points = 0;
  std::uint64_t skipped = 0;  // points outside the spec's domain
  bool exhaustive = false;
  bool ok() const { return violation_count == 0; }
};

/// Sweeps the input domain (exhaustively when it has at most 2^exhaustive_bound
/// points, otherwise `samples` seeded random points) and reports every
/// RegeneratedInput output that differs from its input and, when `spec` is given,
/// every specified output that differs from `spec.eval`. Without a spec the
/// domain is all primary-input assignments. Throws std::invalid_argument when the
/// domain is too large and `samples` is 0, or when fields do not match the circuit.
RoleCheckResult check_roles(const Circuit& circuit, const CheckOptions& options = {},
                            const FunctionalSpec* spec = nullptr);

/// Number of points in a spec's (or the raw primary-input) domain, saturating at 2^64-1.
std::uint64_t domain_size(const Circuit& circuit, const FunctionalSpec* spec);

}  // namespace revadd
