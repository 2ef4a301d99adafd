#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mlcf/window.hpp"

namespace mlcf {

// UPPER:        λ_i < t for every completion (i is the single index, default 0)
// LOWER:        λ_i > t for every completion
// DISJUNCTIVE:  for every completion, λ_i > t_i for some i in the index set
enum class ClaimKind { Upper, Lower, Disjunctive };

std::string to_string(ClaimKind kind);
ClaimKind parse_claim_kind(std::string_view text);

struct Claim {
  std::string id;
  WindowPattern pattern;
  ClaimKind kind = ClaimKind::Upper;
  std::vector<Rational> thresholds;         // one per index, or a single shared value
  std::vector<std::string> threshold_text;  // as written, for reports
  std::vector<long> indices{0};
  std::string printed;  // decimal the achieved bound should reproduce, if any

  const Rational& threshold(std::size_t k) const { return thresholds.size() == 1 ? thresholds[0] : thresholds.at(k); }
  // Same claim about the reversed sequence: positions and indices negate.
  Claim transposed() const;
  void validate() const;
};

enum class Status { Proved, Refuted, Inconclusive };
std::string to_string(Status status);

struct Verdict {
  Status status = Status::Inconclusive;
  std::optional<BiSeq> witness;  // extremal completion (UPPER/LOWER) or counterexample
  RInterval bound;               // extremum achieved (UPPER/LOWER); weakest clearing bound (DISJUNCTIVE)
  int depth_used = 0;
  std::size_t nodes = 0;
  std::optional<long> clearing_index;  // DISJUNCTIVE: index that cleared the weakest leaf
};

struct ProverOptions {
  int max_depth = 24;
  Rational tol{Rational(1, 1) / Rational(Int("100000000000000000000000000000"))};  // 1e-29 bound width
};

Verdict prove_claim(const Claim& claim, const ProverOptions& options = {});

}  // namespace mlcf
