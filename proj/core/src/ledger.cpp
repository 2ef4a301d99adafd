#include "mlcf/ledger.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mlcf/error.hpp"
#include "text.hpp"

namespace mlcf {

namespace {

using detail::split;
using detail::trim;

// Items of an index set; each is a single index or an inclusive range.
std::vector<std::pair<long, long>> parse_index_items(const std::string& text, std::size_t line) {
  std::vector<std::pair<long, long>> out;
  if (text.empty()) return {{0, 0}};
  for (const std::string& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      if (auto dots = item.find(".."); dots != std::string::npos) {
        long a = std::stol(item.substr(0, dots));
        long b = std::stol(item.substr(dots + 2), &used);
        if (a > b) throw ParseError("empty index range '" + item + "'", line);
        out.emplace_back(a, b);
      } else {
        long a = std::stol(item, &used);
        if (used != item.size()) throw ParseError("bad index '" + item + "'", line);
        out.emplace_back(a, a);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad index '" + item + "'", line);
    } catch (const std::out_of_range&) {
      throw ParseError("bad index '" + item + "'", line);
    }
  }
  return out;
}

}  // namespace

Ledger Ledger::parse(std::string_view text) {
  Ledger ledger;
  Alphabet alphabet{1, 2, 3};
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.rfind("@alphabet", 0) == 0) {
      alphabet = Alphabet::parse(trim(line.substr(9)));
      continue;
    }
    auto fields = split(line, '|');
    if (fields.size() < 5 || fields.size() > 7) {
      throw ParseError("expected 5 to 7 '|'-separated fields", line_no);
    }
    Claim c;
    c.id = fields[0];
    if (c.id.empty()) throw ParseError("empty claim id", line_no);
    Alphabet a = fields.size() == 7 && !fields[6].empty() ? Alphabet::parse(fields[6]) : alphabet;
    try {
      c.pattern = WindowPattern::parse(fields[1], a);
      c.kind = parse_claim_kind(fields[2]);
      // One threshold for all indices, or one per index-set item.
      std::vector<std::string> texts = split(fields[3], ',');
      auto items = parse_index_items(fields[4], line_no);
      if (texts.size() != 1 && texts.size() != items.size()) {
        throw ParseError("thresholds do not match the index set", line_no);
      }
      std::map<long, std::string> by_index;
      for (std::size_t k = 0; k < items.size(); ++k) {
        const std::string& t = texts.size() == 1 ? texts[0] : texts[k];
        for (long i = items[k].first; i <= items[k].second; ++i) {
          if (!by_index.emplace(i, t).second) throw ParseError("index " + std::to_string(i) + " repeated", line_no);
        }
      }
      c.indices.clear();
      for (const auto& [i, t] : by_index) {
        c.indices.push_back(i);
        if (texts.size() != 1) {
          c.thresholds.push_back(parse_rational(t));
          c.threshold_text.push_back(t);
        }
      }
      if (texts.size() == 1) {
        c.thresholds.push_back(parse_rational(texts[0]));
        c.threshold_text.push_back(texts[0]);
      }
      if (fields.size() >= 6) c.printed = fields[5];
      if (!c.printed.empty()) parse_rational(c.printed);
      c.validate();
    } catch (const ParseError& e) {
      throw ParseError(c.id + ": " + (e.position() == line_no ? e.message() : std::string(e.what())), line_no);
    } catch (const DomainError& e) {
      throw ParseError(c.id + ": " + e.what(), line_no);
    }
    for (const Claim& other : ledger.claims) {
      if (other.id == c.id) throw ParseError("duplicate claim id " + c.id, line_no);
    }
    ledger.claims.push_back(std::move(c));
  }
  return ledger;
}

Ledger Ledger::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ledger file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const Claim& Ledger::find(std::string_view id) const {
  for (const Claim& c : claims) {
    if (c.id == id) return c;
  }
  throw Error("no claim with id " + std::string(id));
}

Claim& Ledger::find(std::string_view id) {
  return const_cast<Claim&>(static_cast<const Ledger&>(*this).find(id));
}

std::vector<Claim> select_claims(const Ledger& ledger, std::string_view prefix) {
  std::vector<Claim> out;
  for (const Claim& c : ledger.claims) {
    if (c.id == prefix) {
      out.push_back(c);
    } else if (c.id.size() > prefix.size() && c.id.compare(0, prefix.size(), prefix) == 0) {
      char next = c.id[prefix.size()];
      if (next == '.' || next == '/' || next == '^') out.push_back(c);
    }
  }
  return out;
}

Status LedgerEntry::status() const {
  Status s = verdict.status;
  if (transposed && transposed->status != Status::Proved && s == Status::Proved) s = transposed->status;
  return s;
}

bool LedgerReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.passed(); });
}

std::vector<std::string> LedgerReport::failures() const {
  std::vector<std::string> out;
  for (const LedgerEntry& e : entries) {
    if (!e.passed()) out.push_back(e.id);
  }
  return out;
}

std::string LedgerReport::to_json(int digits) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const LedgerEntry& e : entries) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["status"] = to_string(e.status());
    j["bound_lo"] = e.verdict.bound.lo_string(digits);
    j["bound_hi"] = e.verdict.bound.hi_string(digits);
    j["depth_used"] = e.verdict.depth_used;
    j["kind"] = to_string(e.kind);
    j["nodes"] = e.verdict.nodes;
    if (e.transposed) j["transposed_status"] = to_string(e.transposed->status);
    if (!e.printed.empty()) {
      j["printed"] = e.printed;
      j["printed_match"] = e.printed_ok;
    }
    if (e.verdict.witness && e.verdict.status != Status::Proved) j["witness"] = to_literal(*e.verdict.witness);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string LedgerReport::to_text(int digits) const {
  std::ostringstream os;
  for (const LedgerEntry& e : entries) {
    os << (e.passed() ? "ok   " : "FAIL ") << e.id << "  " << to_string(e.status()) << "  "
       << e.verdict.bound.to_string(digits) << "  depth " << e.verdict.depth_used;
    if (!e.printed.empty()) os << "  printed " << e.printed << (e.printed_ok ? "" : " (mismatch)");
    os << "\n";
  }
  os << (passed() ? "ledger PASS" : "ledger FAIL") << " (" << entries.size() << " claims)\n";
  return os.str();
}

Verdict prove_adaptive(const Claim& claim, const LedgerOptions& options) {
  ProverOptions opt = options.prover;
  Verdict v = prove_claim(claim, opt);
  while (v.status == Status::Inconclusive && opt.max_depth < options.max_depth_cap) {
    opt.max_depth = std::min(opt.max_depth * 2, options.max_depth_cap);
    v = prove_claim(claim, opt);
  }
  return v;
}

namespace {

LedgerEntry run_one(const Claim& c, const LedgerOptions& options) {
  LedgerEntry e;
  e.id = c.id;
  e.kind = c.kind;
  e.printed = c.printed;
  e.verdict = prove_adaptive(c, options);
  if (options.check_transposed) e.transposed = prove_adaptive(c.transposed(), options);
  if (!c.printed.empty()) e.printed_ok = matches_printed(e.verdict.bound, c.printed);
  return e;
}

}  // namespace

LedgerReport run_ledger(const std::vector<Claim>& claims, const LedgerOptions& options) {
  LedgerReport report;
  report.entries.resize(claims.size());
  int jobs = std::max(1, options.jobs);
  if (jobs == 1 || claims.size() < 2) {
    for (std::size_t k = 0; k < claims.size(); ++k) report.entries[k] = run_one(claims[k], options);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t k = next++; k < claims.size(); k = next++) report.entries[k] = run_one(claims[k], options);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

}  // namespace mlcf
