#include "mlcf/prover.hpp"

#include <algorithm>
#include <cstdlib>

#include "mlcf/error.hpp"

namespace mlcf {

std::string to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::Upper: return "UPPER";
    case ClaimKind::Lower: return "LOWER";
    case ClaimKind::Disjunctive: return "DISJUNCTIVE";
  }
  return "?";
}

ClaimKind parse_claim_kind(std::string_view text) {
  if (text == "UPPER") return ClaimKind::Upper;
  if (text == "LOWER") return ClaimKind::Lower;
  if (text == "DISJUNCTIVE") return ClaimKind::Disjunctive;
  throw ParseError("unknown claim kind '" + std::string(text) + "'", 0);
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Proved: return "Proved";
    case Status::Refuted: return "Refuted";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Claim Claim::transposed() const {
  Claim c = *this;
  c.id = id + "^t";
  c.pattern = pattern.transposed();
  for (long& i : c.indices) i = -i;
  return c;
}

void Claim::validate() const {
  if (pattern.known.empty() || !pattern.known.contains(0)) throw DomainError(id + ": pattern has no origin");
  if (indices.empty()) throw DomainError(id + ": empty index set");
  if (kind != ClaimKind::Disjunctive && indices.size() != 1) throw DomainError(id + ": UPPER/LOWER take one index");
  if (thresholds.empty() || (thresholds.size() != 1 && thresholds.size() != indices.size())) {
    throw DomainError(id + ": thresholds do not match the index set");
  }
  for (const Rational& t : thresholds) {
    if (t <= 0) throw DomainError(id + ": thresholds must be positive");
  }
}

namespace {

Verdict prove_extremum(const Claim& c, const ProverOptions& opt) {
  long i = c.indices.front();
  bool upper = c.kind == ClaimKind::Upper;
  Objective obj = upper ? Objective::Maximize : Objective::Minimize;
  Real value = lambda_extreme(c.pattern, i, obj);
  Verdict v;
  v.nodes = 1;
  v.bound = value.enclose(opt.tol);
  v.witness = extremal_completion(c.pattern, i, obj);
  auto cmp = compare(value, c.threshold(0));
  if (!cmp) return v;
  bool holds = upper ? *cmp < 0 : *cmp > 0;
  v.status = holds ? Status::Proved : Status::Refuted;
  return v;
}

// Free position closest to the index set; ties go to smaller |p|, then p < 0.
std::optional<long> split_position(const WindowPattern& w, const std::vector<long>& indices) {
  std::optional<long> best;
  long best_dist = 0;
  auto consider = [&](long p, long dist) {
    if (!best || dist < best_dist || (dist == best_dist && (std::labs(p) < std::labs(*best) ||
                                                            (std::labs(p) == std::labs(*best) && p < *best)))) {
      best = p;
      best_dist = dist;
    }
  };
  long lo = w.min_known(), hi = w.max_known();
  for (long i : indices) {
    for (long p = i; p <= std::max(i, hi + 1); ++p) {
      if (w.is_free(p)) {
        consider(p, p - i);
        break;
      }
      if (p > hi) break;
    }
    for (long p = i; p >= std::min(i, lo - 1); --p) {
      if (w.is_free(p)) {
        consider(p, i - p);
        break;
      }
      if (p < lo) break;
    }
  }
  return best;
}

Verdict prove_disjunctive(const Claim& c, const ProverOptions& opt) {
  struct Node {
    WindowPattern pattern;
    int depth;
  };
  const std::size_t n = c.indices.size();
  long probe = std::find(c.indices.begin(), c.indices.end(), 0) != c.indices.end() ? 0 : c.indices.front();

  Verdict v;
  v.status = Status::Proved;
  std::optional<Real> weakest;
  std::vector<Node> stack{{c.pattern, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    ++v.nodes;
    v.depth_used = std::max(v.depth_used, node.depth);

    // The leaf is cleared by its index with the largest margin λ_i - t_i.
    std::optional<Real> best_margin, best_lb;
    long best_index = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Real lb = lambda_extreme(node.pattern, c.indices[k], Objective::Minimize);
      auto cmp = compare(lb, c.threshold(k));
      if (!cmp || *cmp <= 0) continue;
      Real margin = lb - Real(c.threshold(k));
      auto larger = best_margin ? compare(margin, *best_margin) : std::optional<int>(1);
      if (!best_margin || (larger && *larger > 0)) {
        best_margin = margin;
        best_lb = lb;
        best_index = c.indices[k];
      }
    }
    if (best_margin) {
      auto weaker = weakest ? compare(*best_margin, *weakest) : std::optional<int>(-1);
      if (!weakest || (weaker && *weaker < 0)) {
        weakest = best_margin;
        v.bound = best_lb->enclose(opt.tol);
        v.clearing_index = best_index;
      }
      continue;
    }

    // A concrete completion with every λ_i <= t_i refutes the claim.
    BiSeq candidate = extremal_completion(node.pattern, probe, Objective::Minimize);
    bool violates = true;
    for (std::size_t k = 0; k < n && violates; ++k) {
      auto cmp = compare(lambda_exact(candidate, c.indices[k]), c.threshold(k));
      violates = cmp && *cmp <= 0;
    }
    if (violates) {
      v.status = Status::Refuted;
      v.witness = candidate;
      v.bound = lambda_exact(candidate, probe).enclose(opt.tol);
      v.clearing_index.reset();
      return v;
    }

    auto p = split_position(node.pattern, c.indices);
    if (!p || node.depth >= opt.max_depth) {
      v.status = Status::Inconclusive;
      v.witness = candidate;
      return v;
    }
    const auto& digits = node.pattern.alphabet.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      stack.push_back({node.pattern.with(*p, *it), node.depth + 1});
    }
  }
  return v;
}

}  // namespace

Verdict prove_claim(const Claim& claim, const ProverOptions& options) {
  claim.validate();
  if (options.tol <= 0) throw DomainError("tolerance must be positive");
  if (claim.kind == ClaimKind::Disjunctive) return prove_disjunctive(claim, options);
  return prove_extremum(claim, options);
}

}  // namespace mlcf
