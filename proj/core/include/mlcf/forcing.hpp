#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlcf/ledger.hpp"

namespace mlcf {

// Finite window a_first … a_last around the origin. Digit 0 is a wildcard
// (every alphabet digit allowed); positions outside the window are wildcards too.
struct SymbolicWindow {
  long first = 0;
  Word digits;

  long last() const { return first + static_cast<long>(digits.size()) - 1; }
  Digit at(long pos) const;
  bool known(long pos) const { return at(pos) != 0; }

  SymbolicWindow transposed() const;
  // Outer wildcards removed.
  SymbolicWindow trimmed() const;
  // Same digits re-indexed so that position `pos` becomes the origin.
  SymbolicWindow recentered(long pos) const;
  WindowPattern pattern(const Alphabet& alphabet) const;

  // Every known digit of `other` is known here with the same value.
  bool refines(const SymbolicWindow& other) const;
  // No position where both are known and differ.
  bool consistent(const SymbolicWindow& other) const;

  // "??1233*222??"; the origin must lie inside the window.
  std::string to_literal() const;
  static SymbolicWindow parse(std::string_view literal);

  friend bool operator==(const SymbolicWindow&, const SymbolicWindow&) = default;
};

// Orders windows by the digits read outward from the origin, a_1, a_{-1},
// a_2, a_{-2}, …, wildcards first. Spans are padded symmetrically.
std::strong_ordering outward_order(const SymbolicWindow& a, const SymbolicWindow& b);

// Representative of {w, transpose(w)} that is least in outward_order. This
// puts the larger neighbour on the left, e.g. 33*2 rather than 23*3.
SymbolicWindow canonicalize(const SymbolicWindow& w);

struct ForcingOptions {
  int jobs = 1;
  std::size_t memory_budget = 10'000'000;  // live windows
  bool record_eliminations = false;
};

// A window discarded by the search and the constraint it broke: either
// λ_index ≥ hi for every completion, or (below_lo) λ_0 ≤ lo for every completion.
struct Elimination {
  SymbolicWindow window;
  long index = 0;
  bool below_lo = false;
};

struct SurvivorSet {
  Rational lo, hi;
  long radius = 0;
  Alphabet alphabet;
  std::vector<SymbolicWindow> windows;  // canonical, wildcard-compacted, sorted
  SymbolicWindow core;                  // digits shared by all canonical windows around the origin
  std::size_t raw_count = 0;            // full windows surviving before compaction
  std::size_t eliminated_count = 0;     // candidates pruned during growth
  std::vector<Elimination> eliminations;

  std::vector<std::string> literals(bool trim = true) const;
};

// Windows a_{-radius} … a_radius over the alphabet compatible with
// lo < λ_0 and λ_i < hi for |i| ≤ radius. Growth alternates right and left
// one digit at a time; a window is pruned as soon as the extremal completions
// certify a violated constraint. Throws ResourceError above the budget.
SurvivorSet survivors(const Rational& lo, const Rational& hi, long radius, const Alphabet& alphabet,
                      const ForcingOptions& options = {});

// Extends `start` to the window [-radius, radius] keeping every extension that
// satisfies λ_i < hi for |i| ≤ radius. Returns the full surviving windows.
std::vector<SymbolicWindow> grow_window(const SymbolicWindow& start, const Rational& hi, long radius,
                                        const Alphabet& alphabet, const ForcingOptions& options = {},
                                        std::vector<Elimination>* eliminations = nullptr,
                                        std::size_t* eliminated_count = nullptr);

// Positions around the origin where all windows agree; wildcards elsewhere.
SymbolicWindow common_core(const std::vector<SymbolicWindow>& windows);

// Merges groups of windows that differ only in one outer position and cover
// the whole alphabet there into a single window with a wildcard.
std::vector<SymbolicWindow> compact_wildcards(std::vector<SymbolicWindow> windows, const Alphabet& alphabet);

inline const char* kReplicationSeed = "2332221233*222123322";
inline constexpr long kReplicationShift = -7;
inline constexpr long kReplicationRadius = 17;

struct Replication {
  Rational bound;
  long radius = kReplicationRadius;
  bool forced = false;
  SymbolicWindow core;                    // digits forced around the origin
  std::vector<SymbolicWindow> branches;   // surviving windows, compacted
  std::optional<long> seed_offset;        // where the seed recurs inside the core
  std::size_t eliminated_count = 0;
  std::vector<Elimination> eliminations;  // filled when options.record_eliminations
};

// Forces the left continuation of a window containing the seed at the origin
// under λ_i < bound for |i| ≤ radius. `forced` means the seed recurs in the
// forced core at kReplicationShift; otherwise `branches` lists what survives.
Replication replicate_left(const SymbolicWindow& window, const Rational& bound, const Alphabet& alphabet = Alphabet{1, 2, 3},
                           long radius = kReplicationRadius, const ForcingOptions& options = {});

struct ReplicationChain {
  SymbolicWindow window;  // accumulated digits in the coordinates of the first step
  std::vector<Replication> steps;
  bool forced = false;    // every step forced
};

// Applies replicate_left k times, recentering on the recurring seed each time.
ReplicationChain iterate_replication(const SymbolicWindow& seed, const Rational& bound, int k,
                                     const Alphabet& alphabet = Alphabet{1, 2, 3}, const ForcingOptions& options = {});

// Longest run of consecutive copies of `block` (read left to right) lying
// entirely at positions below `before`.
int count_left_copies(const SymbolicWindow& w, const Word& block, long before);

// Cross-check of eliminations against proved claims. A claim instantiated at a
// shift whose known digits sit inside the eliminated window accounts for it
// when its conclusion contradicts the search constraints. Unmatched
// eliminations are restated as claims and proved directly.
struct CrossCheck {
  std::size_t matched = 0;
  std::size_t auxiliary = 0;   // unmatched, but the restated claim is Proved
  std::size_t unverified = 0;  // restated claim not Proved
  std::vector<std::string> claims_used;  // ledger order

  bool passed() const { return unverified == 0; }
};

struct CrossCheckConstraints {
  Rational lo;  // λ_0 > lo; ignored when has_lo is false
  bool has_lo = true;
  Rational hi;  // λ_i < hi for |i| ≤ radius
  long radius = 0;
  Alphabet alphabet;
};

CrossCheck cross_check(const std::vector<Elimination>& eliminations, const CrossCheckConstraints& constraints,
                       const std::vector<Claim>& proved_claims, const ProverOptions& prover = {});

std::string to_json(const SurvivorSet& s, const CrossCheck* check = nullptr);
std::string to_json(const Replication& r, const CrossCheck* check = nullptr);

}  // namespace mlcf
