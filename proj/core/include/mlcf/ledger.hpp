#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mlcf/prover.hpp"

namespace mlcf {

// Line-oriented claim file:
//   id | pattern | kind | threshold[,threshold…] | index_set [| printed [| alphabet]]
// '#' starts a comment; "@alphabet 123" sets the default alphabet for the
// lines that follow. index_set is a comma list of integers and ranges a..b,
// empty meaning {0}.
struct Ledger {
  std::vector<Claim> claims;

  static Ledger parse(std::string_view text);
  static Ledger load(const std::filesystem::path& path);
  const Claim& find(std::string_view id) const;
  Claim& find(std::string_view id);
};

struct LedgerOptions {
  int jobs = 1;
  ProverOptions prover;
  int max_depth_cap = 96;  // Inconclusive claims are retried with doubled depth up to this
  bool check_transposed = true;
};

struct LedgerEntry {
  std::string id;
  ClaimKind kind = ClaimKind::Upper;
  Verdict verdict;
  std::optional<Verdict> transposed;
  std::string printed;
  bool printed_ok = true;

  Status status() const;
  bool passed() const { return status() == Status::Proved && printed_ok; }
};

struct LedgerReport {
  std::vector<LedgerEntry> entries;

  bool passed() const;
  std::vector<std::string> failures() const;
  // JSON array of {id, status, bound_lo, bound_hi, depth_used, …}.
  std::string to_json(int digits = 20) const;
  std::string to_text(int digits = 16) const;
};

Verdict prove_adaptive(const Claim& claim, const LedgerOptions& options);
LedgerReport run_ledger(const std::vector<Claim>& claims, const LedgerOptions& options = {});

// Claims whose id equals `prefix` or starts with `prefix` followed by '.', '/' or '^'.
std::vector<Claim> select_claims(const Ledger& ledger, std::string_view prefix);

}  // namespace mlcf
