#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mlcf/ledger.hpp"

namespace mlcf {

// Left context of the Cantor set C: …3322212 33* 2221233222122121212 θ.
inline const char* kCantorBase = "(3322212)33*2221233222122121212";
inline const char* kJ0Sequence = "(33*22212)";
inline const char* kJ1Sequence = "(21)12212332221233*22212332221233321(12)";
inline const char* kUpsilonSequence = "(3322212)33*222123322212212121(12)";

// Enclosure of λ_0 over every θ ∈ {1,2}^N that extends theta_prefix. The two
// ends come from the extremal tails over {1,2}.
RInterval c_point(const Word& theta_prefix, const Rational& tol);
// The same pair of extremes, exactly.
std::pair<Real, Real> c_point_exact(const Word& theta_prefix);

struct GapInterval {
  std::string label;
  Real lo, hi;
  RInterval enclose(const Rational& tol) const;
};

// J = (j0, j1): j0 = λ_0 of the periodic 33*22212, j1 = λ_0 of the j1 sequence.
GapInterval interval_J();

struct Upsilon {
  Real value;
  RInterval enclosure;
  // Replay of the digit-forcing chain a13 … a18 as ledger claims.
  LedgerReport chain;
  bool chain_proved() const { return !chain.entries.empty() && chain.passed(); }
};

Real upsilon_value();
// Replays the ledger claims whose ids start with `chain_prefix`.
Upsilon upsilon(const Ledger& ledger, const Rational& tol, const LedgerOptions& options = {},
                const std::string& chain_prefix = "ups");

// Upper bound on c(B,C) for one region: a λ_0 value
// of an explicit sequence checked against a chain of numbers it lies below.
struct BlockBound {
  std::string text;  // "sqrt(10)", "3.0407"
  Real value;
};

struct SymmetricBlockSpec {
  std::string id;
  std::string region;
  std::vector<Word> generators;     // B
  std::string restrictions;         // adjacency rules on B, as text
  Alphabet ambient;                 // alphabet of C
  std::vector<Word> forbidden;      // forbidden words of C
  std::optional<BiSeq> expression;  // the extremal sequence; absent when only the bound is stated
  std::string expression_text;
  std::vector<BlockBound> bounds;   // increasing
};

// One block per line:
//   id | region | generators | alphabet[;forbidden,…] | sequence or '-' | bound[,bound…] [| restrictions]
std::vector<SymmetricBlockSpec> parse_blocks(std::string_view text);
std::vector<SymmetricBlockSpec> load_blocks(const std::filesystem::path& path);
BlockBound parse_bound(std::string_view text);

// Certified enclosure of the stated c(B,C) bound. Throws VerificationFailure
// when it does not lie strictly below every listed bound, DomainError when
// `spec` has no expression.
RInterval verify_block_constant(const SymmetricBlockSpec& spec, const Rational& tol);

struct BlockCheck {
  std::string id;
  std::optional<RInterval> value;
  bool verified = false;
  bool stated_only = false;  // no expression: the bound is recorded, not recomputed
  std::string message;
};
BlockCheck check_block(const SymmetricBlockSpec& spec, const Rational& tol);

// Shortest word w such that prefix·w·suffix is a factor of Σ(B), the free
// concatenations of the generators. Ties go to the smaller digits.
std::optional<Word> block_bridge(const std::vector<Word>& generators, const Word& prefix, const Word& suffix,
                                 std::size_t max_length = 64);
bool block_admissible(const std::vector<Word>& generators, const Word& w);

struct SpliceResult {
  Word period;           // P_k = a_0 … a_{n_k} (μ∗ν)_k a_{-m_k} … a_{-1}, repeated
  Word mu_plus, connector, nu_minus;
  long splice_begin = 0; // index of (μ∗ν)_k inside the period
  Real m;                // m(a) = λ_0(a)
  RInterval m_pk;        // m(P_k)
  RInterval theta_max;   // max of the four completions' Markov values
  Rational eps;          // 2^{-(k-2)}
  bool e2 = false;       // λ_j(P_k) ≤ theta_max + eps on the copy of a
  std::optional<bool> e3;  // λ_j(P_k) < c + 2^{-(k-1)} inside the splice (when c is given)
  bool e4 = false;       // λ_0(P_k) > m - eps
  bool sandwich = false; // m - eps ≤ m(P_k) ≤ theta_max + eps
};

// Desk-scale instance of the key lemma's periodic splice for a periodic
// sequence `a` whose Markov value is attained at the origin. μ and ν are the
// Σ(B)-admissible words of length k closest to a's continuations (greedy,
// digit by digit); the connector defaults to block_bridge.
SpliceResult key_lemma_splice(const BiSeq& a, const std::vector<Word>& generators, const Alphabet& ambient, int k,
                              const Rational& tol, std::optional<Word> connector = std::nullopt,
                              std::optional<Real> c_bound = std::nullopt);

}  // namespace mlcf
