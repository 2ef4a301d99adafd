#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mlcf/constants.hpp"
#include "mlcf/cover.hpp"
#include "mlcf/dim.hpp"
#include "mlcf/forcing.hpp"

namespace mlcf {

// Shifts one ledger threshold before the run. `relative_to_bound` moves it to
// the achieved extremum plus `delta` instead of the transcribed value plus `delta`.
struct Tamper {
  std::string claim_id;
  Rational delta;
  bool relative_to_bound = false;
};

// Shifts the thresholds of the named claims in place. A relative tamper on a
// DISJUNCTIVE claim moves all of its thresholds by the same amount, measured
// against the threshold of the index that cleared the weakest leaf.
void apply_tampers(Ledger& ledger, const std::vector<Tamper>& tampers, const LedgerOptions& options = {});

// $MLCF_DATA_DIR when set, otherwise the data directory of the source tree
// this library was built from.
std::filesystem::path default_data_dir();

struct RunConfig {
  long precision = 128;  // MPFR bits for powers
  Rational tol = pow10(-20);
  int jobs = 1;
  std::filesystem::path data_dir = default_data_dir();
  std::filesystem::path ledger_file, blocks_file, constants_file, cover_dir, subshift_dir;
  std::optional<std::filesystem::path> out;
  long survivor_radius = 9;
  int dim_order = 8;
  int replication_iterations = 10;
  std::optional<std::string> region;  // restricts theorem2 / appendixB to one region id
  std::vector<Tamper> tampers;

  // Fills unset paths from data_dir.
  void resolve();
  // Throws DomainError on a non-positive tolerance or a missing file.
  void validate() const;
};

enum class ItemStatus { Pass, Fail, Incomplete, Cited, Heuristic };
std::string to_string(ItemStatus s);

struct ReportItem {
  std::string id;
  ItemStatus status = ItemStatus::Pass;
  std::string value;   // decimal string; empty when the item carries no number
  std::string lo, hi;  // enclosure as decimal strings
  std::string locus;
  std::vector<std::string> flags;
  std::string detail;
};

struct ReportSection {
  std::string name;
  std::vector<ReportItem> items;
};

enum class Verdict3 { Pass, Fail, Incomplete };
std::string to_string(Verdict3 v);

struct Report {
  std::string name;
  std::vector<ReportSection> sections;
  Verdict3 verdict = Verdict3::Pass;
  std::vector<std::string> culprits;  // ids of failed or incomplete items

  // Recomputes verdict and culprits from the items.
  void finalize();
  std::string to_json() const;
  std::string to_text() const;
  const ReportItem* find(const std::string& id) const;
};

// Problems that make a report unfit for publication: numeric JSON values,
// values without an enclosure or locus.
std::vector<std::string> lint_report(const Report& r);
std::vector<std::string> lint_json(const std::string& json);

Report report_theorem1(const RunConfig& config);
Report report_theorem2(const RunConfig& config);
Report report_appendixB(const RunConfig& config);

// Enclosure rendered as [lo, hi] decimal strings with `digits` places, outward.
ReportItem enclosure_item(const std::string& id, ItemStatus status, const RInterval& x, int digits, const std::string& locus);

}  // namespace mlcf
