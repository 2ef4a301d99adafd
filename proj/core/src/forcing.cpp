#include "mlcf/forcing.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "mlcf/error.hpp"

namespace mlcf {

Digit SymbolicWindow::at(long pos) const {
  if (pos < first || pos > last()) return 0;
  return digits[static_cast<std::size_t>(pos - first)];
}

SymbolicWindow SymbolicWindow::transposed() const {
  return SymbolicWindow{-last(), mlcf::reversed(digits)};
}

SymbolicWindow SymbolicWindow::trimmed() const {
  std::size_t a = 0, b = digits.size();
  while (a < b && digits[a] == 0) ++a;
  while (b > a && digits[b - 1] == 0) --b;
  return SymbolicWindow{first + static_cast<long>(a), Word(digits.begin() + a, digits.begin() + b)};
}

SymbolicWindow SymbolicWindow::recentered(long pos) const { return SymbolicWindow{first - pos, digits}; }

WindowPattern SymbolicWindow::pattern(const Alphabet& alphabet) const {
  WindowPattern p;
  p.alphabet = alphabet;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] != 0) p.known[first + static_cast<long>(k)] = digits[k];
  }
  return p;
}

bool SymbolicWindow::refines(const SymbolicWindow& other) const {
  for (long p = other.first; p <= other.last(); ++p) {
    Digit d = other.at(p);
    if (d != 0 && at(p) != d) return false;
  }
  return true;
}

bool SymbolicWindow::consistent(const SymbolicWindow& other) const {
  for (long p = std::max(first, other.first); p <= std::min(last(), other.last()); ++p) {
    Digit a = at(p), b = other.at(p);
    if (a != 0 && b != 0 && a != b) return false;
  }
  return true;
}

std::string SymbolicWindow::to_literal() const {
  std::string s;
  long lo = std::min(first, 0L), hi = std::max(last(), 0L);
  for (long p = lo; p <= hi; ++p) {
    Digit d = at(p);
    s += d == 0 ? '?' : static_cast<char>('0' + d);
    if (p == 0) s += '*';
  }
  return s;
}

SymbolicWindow SymbolicWindow::parse(std::string_view literal) {
  Word w;
  long origin = -1;
  for (std::size_t i = 0; i < literal.size(); ++i) {
    char c = literal[i];
    if (c == '*') {
      if (origin >= 0 || w.empty()) throw ParseError("window needs exactly one '*' after a digit", i);
      origin = static_cast<long>(w.size()) - 1;
    } else if (c == '?') {
      w.push_back(0);
    } else if (c >= '1' && c <= '9') {
      w.push_back(c - '0');
    } else {
      throw ParseError("unexpected character in window", i);
    }
  }
  if (origin < 0) throw ParseError("window has no '*'", literal.size());
  return SymbolicWindow{-origin, std::move(w)};
}

std::strong_ordering outward_order(const SymbolicWindow& a, const SymbolicWindow& b) {
  long r = std::max({-a.first, a.last(), -b.first, b.last(), 0L});
  if (auto c = a.at(0) <=> b.at(0); c != 0) return c;
  for (long k = 1; k <= r; ++k) {
    if (auto c = a.at(k) <=> b.at(k); c != 0) return c;
    if (auto c = a.at(-k) <=> b.at(-k); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

SymbolicWindow canonicalize(const SymbolicWindow& w) {
  SymbolicWindow t = w.transposed();
  return outward_order(t, w) < 0 ? t : w;
}

std::vector<std::string> SurvivorSet::literals(bool trim) const {
  std::vector<std::string> out;
  for (const auto& w : windows) out.push_back(trim ? w.trimmed().to_literal() : w.to_literal());
  return out;
}

namespace {

// First violated constraint of a fully known window, if certified.
std::optional<Elimination> violation(const SymbolicWindow& w, const Alphabet& alphabet, const Rational& hi,
                                     long radius, const Rational* lo) {
  WindowPattern p = w.pattern(alphabet);
  for (long i = std::max(w.first, -radius); i <= std::min(w.last(), radius); ++i) {
    auto c = compare(lambda_extreme(p, i, Objective::Minimize), hi);
    if (c && *c >= 0) return Elimination{w, i, false};
  }
  if (lo != nullptr && w.first <= 0 && w.last() >= 0) {
    auto c = compare(lambda_extreme(p, 0, Objective::Maximize), *lo);
    if (c && *c <= 0) return Elimination{w, 0, true};
  }
  return std::nullopt;
}

template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), n);
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < n;) f(k);
    });
  }
  for (auto& th : pool) th.join();
}

struct Growth {
  const Alphabet& alphabet;
  const Rational& hi;
  long radius;
  const Rational* lo;
  const ForcingOptions& options;
  std::vector<Elimination>* eliminations;
  std::size_t eliminated = 0;

  // Extends every window by one digit on the given side and prunes.
  std::vector<SymbolicWindow> extend(const std::vector<SymbolicWindow>& live, bool right) {
    std::size_t n = live.size() * alphabet.digits().size();
    if (n > options.memory_budget) throw ResourceError("survivor search exceeded the window budget", n);
    std::vector<SymbolicWindow> cand;
    cand.reserve(n);
    for (const auto& w : live) {
      for (Digit d : alphabet.digits()) {
        SymbolicWindow x = w;
        if (right) {
          x.digits.push_back(d);
        } else {
          x.digits.insert(x.digits.begin(), d);
          --x.first;
        }
        cand.push_back(std::move(x));
      }
    }
    return prune(std::move(cand));
  }

  std::vector<SymbolicWindow> prune(std::vector<SymbolicWindow> cand) {
    std::vector<std::optional<Elimination>> verdict(cand.size());
    parallel_for(cand.size(), options.jobs, [&](std::size_t k) { verdict[k] = violation(cand[k], alphabet, hi, radius, lo); });
    std::vector<SymbolicWindow> kept;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (!verdict[k]) {
        kept.push_back(std::move(cand[k]));
      } else {
        ++eliminated;
        if (eliminations != nullptr) eliminations->push_back(std::move(*verdict[k]));
      }
    }
    return kept;
  }
};

}  // namespace

std::vector<SymbolicWindow> compact_wildcards(std::vector<SymbolicWindow> windows, const Alphabet& alphabet) {
  std::size_t full = alphabet.digits().size();
  bool changed = true;
  while (changed && !windows.empty()) {
    changed = false;
    long first = windows.front().first, last = windows.front().last();
    for (const auto& w : windows) {
      if (w.first != first || w.last() != last) throw DomainError("compact_wildcards needs windows of equal span");
    }
    for (int side : {+1, -1}) {
      long outer = side > 0 ? last : first;
      for (long p = outer; p * side >= 1; p -= side) {
        // Only positions whose outward neighbours are already wildcards.
        auto eligible = [&](const SymbolicWindow& w) {
          if (w.at(p) == 0) return false;
          for (long q = p + side; q * side <= outer * side; q += side) {
            if (w.at(q) != 0) return false;
          }
          return true;
        };
        std::map<Word, std::set<Digit>> groups;
        for (const auto& w : windows) {
          if (!eligible(w)) continue;
          Word key = w.digits;
          key[static_cast<std::size_t>(p - first)] = 0;
          groups[key].insert(w.at(p));
        }
        std::vector<SymbolicWindow> next;
        std::set<Word> emitted;
        for (auto& w : windows) {
          if (eligible(w)) {
            Word key = w.digits;
            key[static_cast<std::size_t>(p - first)] = 0;
            if (groups[key].size() == full) {
              if (emitted.insert(key).second) next.push_back(SymbolicWindow{first, key});
              changed = true;
              continue;
            }
          }
          next.push_back(std::move(w));
        }
        windows = std::move(next);
      }
    }
  }
  return windows;
}

SurvivorSet survivors(const Rational& lo, const Rational& hi, long radius, const Alphabet& alphabet,
                      const ForcingOptions& options) {
  if (!(lo < hi)) throw DomainError("survivors needs lo < hi");
  if (radius < 1) throw DomainError("survivors needs radius >= 1");
  SurvivorSet out;
  out.lo = lo;
  out.hi = hi;
  out.radius = radius;
  out.alphabet = alphabet;
  Growth g{alphabet, hi, radius, &lo, options, options.record_eliminations ? &out.eliminations : nullptr};

  std::vector<SymbolicWindow> live;
  for (Digit d : alphabet.digits()) live.push_back(SymbolicWindow{0, Word{d}});
  live = g.prune(std::move(live));
  for (long r = 1; r <= radius && !live.empty(); ++r) {
    live = g.extend(live, true);
    live = g.extend(live, false);
  }
  out.raw_count = live.size();
  out.eliminated_count = g.eliminated;

  std::vector<SymbolicWindow> compact = compact_wildcards(std::move(live), alphabet);
  for (auto& w : compact) w = canonicalize(w);
  std::sort(compact.begin(), compact.end(), [](const auto& a, const auto& b) { return outward_order(a, b) < 0; });
  compact.erase(std::unique(compact.begin(), compact.end()), compact.end());
  out.windows = std::move(compact);
  out.core = common_core(out.windows);
  return out;
}

std::vector<SymbolicWindow> grow_window(const SymbolicWindow& start, const Rational& hi, long radius,
                                        const Alphabet& alphabet, const ForcingOptions& options,
                                        std::vector<Elimination>* eliminations, std::size_t* eliminated_count) {
  if (start.digits.empty() || start.first > 0 || start.last() < 0) throw DomainError("start window must contain the origin");
  if (std::count(start.digits.begin(), start.digits.end(), 0) != 0) throw DomainError("start window must be fully known");
  for (Digit d : start.digits) {
    if (!alphabet.contains(d)) throw DomainError("start window uses a digit outside the alphabet");
  }
  Growth g{alphabet, hi, radius, nullptr, options, eliminations};
  std::vector<SymbolicWindow> live = g.prune({start});
  while (!live.empty()) {
    bool right = live.front().last() < radius, left = live.front().first > -radius;
    if (!right && !left) break;
    if (right) live = g.extend(live, true);
    if (left && !live.empty()) live = g.extend(live, false);
  }
  if (eliminated_count != nullptr) *eliminated_count += g.eliminated;
  return live;
}

SymbolicWindow common_core(const std::vector<SymbolicWindow>& windows) {
  if (windows.empty()) return {};
  auto agree = [&](long p) {
    Digit d = windows.front().at(p);
    if (d == 0) return false;
    return std::all_of(windows.begin(), windows.end(), [&](const auto& w) { return w.at(p) == d; });
  };
  if (!agree(0)) return {};
  long a = 0, b = 0;
  while (agree(b + 1)) ++b;
  while (agree(a - 1)) --a;
  SymbolicWindow core{a, {}};
  for (long p = a; p <= b; ++p) core.digits.push_back(windows.front().at(p));
  return core;
}

Replication replicate_left(const SymbolicWindow& window, const Rational& bound, const Alphabet& alphabet, long radius,
                           const ForcingOptions& options) {
  Replication r;
  r.bound = bound;
  r.radius = radius;
  std::vector<SymbolicWindow> live = grow_window(window, bound, radius, alphabet, options,
                                                 options.record_eliminations ? &r.eliminations : nullptr,
                                                 &r.eliminated_count);
  r.core = common_core(live);
  SymbolicWindow seed = SymbolicWindow::parse(kReplicationSeed);
  SymbolicWindow shifted{seed.first + kReplicationShift, seed.digits};
  if (!r.core.digits.empty() && r.core.refines(shifted)) {
    r.forced = true;
    r.seed_offset = kReplicationShift;
  }
  r.branches = compact_wildcards(std::move(live), alphabet);
  return r;
}

namespace {

SymbolicWindow merge(const SymbolicWindow& a, const SymbolicWindow& b) {
  if (a.digits.empty()) return b;
  if (b.digits.empty()) return a;
  SymbolicWindow m{std::min(a.first, b.first), {}};
  for (long p = m.first; p <= std::max(a.last(), b.last()); ++p) {
    Digit x = a.at(p), y = b.at(p);
    if (x != 0 && y != 0 && x != y) throw VerificationFailure("forced digits disagree at position " + std::to_string(p));
    m.digits.push_back(x != 0 ? x : y);
  }
  return m;
}

}  // namespace

ReplicationChain iterate_replication(const SymbolicWindow& seed, const Rational& bound, int k, const Alphabet& alphabet,
                                     const ForcingOptions& options) {
  ReplicationChain chain;
  chain.window = seed;
  chain.forced = true;
  long center = 0;
  for (int s = 0; s < k; ++s) {
    Replication r = replicate_left(chain.window.recentered(center), bound, alphabet, kReplicationRadius, options);
    bool forced = r.forced;
    chain.window = merge(chain.window, r.core.recentered(-center));
    chain.steps.push_back(std::move(r));
    if (!forced) {
      chain.forced = false;
      break;
    }
    center += kReplicationShift;
  }
  return chain;
}

int count_left_copies(const SymbolicWindow& w, const Word& block, long before) {
  long n = static_cast<long>(block.size());
  if (n == 0) return 0;
  int best = 0;
  for (long end = before; end - n >= w.first; --end) {
    int run = 0;
    for (long e = end; e - n >= w.first; e -= n) {
      bool match = true;
      for (long q = 0; q < n && match; ++q) match = w.at(e - n + q) == block[static_cast<std::size_t>(q)];
      if (!match) break;
      ++run;
    }
    best = std::max(best, run);
  }
  return best;
}

namespace {

bool subset(const Alphabet& a, const Alphabet& b) {
  return std::all_of(a.digits().begin(), a.digits().end(), [&](Digit d) { return b.contains(d); });
}

// Does the claim, placed with its origin at `shift`, contradict the constraints?
bool contradicts(const Claim& c, long shift, const CrossCheckConstraints& k) {
  switch (c.kind) {
    case ClaimKind::Upper:
      return k.has_lo && c.indices.front() + shift == 0 && c.threshold(0) <= k.lo;
    case ClaimKind::Lower:
    case ClaimKind::Disjunctive:
      for (std::size_t n = 0; n < c.indices.size(); ++n) {
        long i = c.indices[n] + shift;
        if (i < -k.radius || i > k.radius || c.threshold(n) < k.hi) return false;
      }
      return true;
  }
  return false;
}

bool placed_inside(const Claim& c, long shift, const SymbolicWindow& w) {
  for (const auto& [pos, d] : c.pattern.known) {
    if (w.at(pos + shift) != d) return false;
  }
  return true;
}

}  // namespace

CrossCheck cross_check(const std::vector<Elimination>& eliminations, const CrossCheckConstraints& constraints,
                       const std::vector<Claim>& proved_claims, const ProverOptions& prover) {
  std::vector<std::pair<std::size_t, Claim>> usable;
  for (std::size_t n = 0; n < proved_claims.size(); ++n) {
    const Claim& c = proved_claims[n];
    if (!c.pattern.left_tail.empty() || !c.pattern.right_tail.empty()) continue;
    if (!subset(constraints.alphabet, c.pattern.alphabet)) continue;
    usable.emplace_back(n, c);
    usable.emplace_back(n, c.transposed());
  }
  CrossCheck out;
  std::set<std::size_t> used;
  for (const Elimination& e : eliminations) {
    const SymbolicWindow& w = e.window;
    bool found = false;
    for (const auto& [n, c] : usable) {
      for (long s = w.first - c.pattern.min_known(); s <= w.last() - c.pattern.max_known() && !found; ++s) {
        found = placed_inside(c, s, w) && contradicts(c, s, constraints);
      }
      if (found) {
        used.insert(n);
        break;
      }
    }
    if (found) {
      ++out.matched;
      continue;
    }
    Claim aux;
    aux.id = "aux";
    aux.pattern = w.pattern(constraints.alphabet);
    aux.kind = e.below_lo ? ClaimKind::Upper : ClaimKind::Lower;
    aux.thresholds = {e.below_lo ? constraints.lo : constraints.hi};
    aux.indices = {e.index};
    // The pruning test is non-strict; the claim needs strict inequality.
    Verdict v = prove_claim(aux, prover);
    bool boundary = v.status != Status::Proved &&
                    ((e.below_lo && v.bound.hi() <= constraints.lo) || (!e.below_lo && v.bound.lo() >= constraints.hi));
    if (v.status == Status::Proved || boundary) {
      ++out.auxiliary;
    } else {
      ++out.unverified;
    }
  }
  for (std::size_t n : used) out.claims_used.push_back(proved_claims[n].id);
  return out;
}

namespace {

nlohmann::ordered_json check_json(const CrossCheck& c) {
  nlohmann::ordered_json j;
  j["matched"] = c.matched;
  j["auxiliary"] = c.auxiliary;
  j["unverified"] = c.unverified;
  return j;
}

}  // namespace

std::string to_json(const SurvivorSet& s, const CrossCheck* check) {
  nlohmann::ordered_json j;
  j["radius"] = s.radius;
  j["lo"] = to_exact_decimal(s.lo);
  j["hi"] = to_exact_decimal(s.hi);
  j["alphabet"] = s.alphabet.to_string();
  j["survivors"] = s.literals(true);
  j["core"] = s.core.digits.empty() ? "" : s.core.to_literal();
  j["padded"] = s.literals(false);
  j["raw_count"] = s.raw_count;
  j["eliminated_count"] = s.eliminated_count;
  j["claims_used"] = check != nullptr ? check->claims_used : std::vector<std::string>{};
  if (check != nullptr) j["cross_check"] = check_json(*check);
  return j.dump(2);
}

std::string to_json(const Replication& r, const CrossCheck* check) {
  nlohmann::ordered_json j;
  j["bound"] = to_exact_decimal(r.bound);
  j["radius"] = r.radius;
  j["forced"] = r.forced;
  j["core"] = r.core.digits.empty() ? "" : r.core.to_literal();
  if (r.seed_offset) j["seed_offset"] = *r.seed_offset;
  std::vector<std::string> branches;
  for (const auto& b : r.branches) branches.push_back(b.to_literal());
  j["branches"] = branches;
  j["eliminated_count"] = r.eliminated_count;
  j["claims_used"] = check != nullptr ? check->claims_used : std::vector<std::string>{};
  if (check != nullptr) j["cross_check"] = check_json(*check);
  return j.dump(2);
}

}  // namespace mlcf
