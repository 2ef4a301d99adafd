#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlcf/spectra.hpp"

namespace mlcf {

// ρ(r) = (r+1) / ((A r + B)(C r + D)): the length ratio |I(a_1…a_n w)| / |I(a_1…a_n)|
// as a function of r = q_{n-1}/q_n of the prefix.
struct RatioFunc {
  Int A, B, C, D;
  Word source_word;

  Rational operator()(const Rational& r) const;
  // Enclosure of ρ over every r in [r0, r1] ⊂ [0, 1].
  RInterval over(const Rational& r0, const Rational& r1) const;
};

RatioFunc ratio_function(const Word& w);

// |I(b_1 … b_n)| = 1 / (q_n (q_n + q_{n-1})).
Rational cylinder_length(const Word& w);

// r = q_{n-1}/q_n for the prefix (0 for the empty word).
Rational prefix_ratio(const Word& prefix);

struct SupRatio {
  Surd value;   // exact max of ρ over [0, 1]
  Surd argmax;  // 0, 1 or the interior critical point -1 + sqrt(1 + q)
  bool interior = false;
};

SupRatio sup_ratio(const RatioFunc& f);

struct CoverCase {
  std::string name;  // g, h, i
  std::vector<Word> words;
};

// A bound the source states for one term, "sup ρ_w < value" or "≤ value".
struct StatedBound {
  Word word;
  bool strict = false;
  Rational value;
  std::string text;
};

struct CoverSystem {
  std::string id;
  std::string label;  // "(sqrt(10),sqrt(13))"
  BlockBound region_lo, region_hi;
  std::vector<CoverCase> cases;
  Rational s;       // the exponent at which the sums are claimed below `margin`
  Rational margin;
  std::string base;  // name of the dimension constant added when assembling
  bool heuristic = false;
  std::string block;      // id of the c(B,C) bound that confines the region
  std::optional<int> round_places;  // assembled bound rounded up to this many places
  std::vector<StatedBound> stated;
  std::vector<std::string> notes;
};

// Key/value lines:
//   id: sqrt10-sqrt13
//   region: sqrt(10), sqrt(13)
//   case g: 112, 221
//   s: 0.174813
//   margin: 1
//   base: hensley.E2
//   kind: rigorous | heuristic
//   block: r.sqrt10
//   round: 3 | exact
//   stated: 221 < 1/81.98
//   note: free text
CoverSystem parse_cover_system(std::string_view text);
CoverSystem load_cover_system(const std::filesystem::path& path);
// Every *.txt file in `dir`, sorted by file name.
std::vector<CoverSystem> load_cover_systems(const std::filesystem::path& dir);

enum class CoverMode {
  PerTerm,  // each term bounded by its own sup over [0, 1], then summed
  Joint,    // sup over r of the whole case sum
};

struct CoverOptions {
  CoverMode mode = CoverMode::PerTerm;
  long bits = 128;
  Rational joint_tol = Rational(1, 1000000000);
};

struct CaseSum {
  std::string name;
  RInterval value;
};

// Per-case enclosures of Σ_w sup ρ_w^s.
std::vector<CaseSum> case_sums(const CoverSystem& cs, const Rational& s, const CoverOptions& options = {});
// Max over the cases.
RInterval case_sum(const CoverSystem& cs, const Rational& s, const CoverOptions& options = {});

struct Threshold {
  Rational s_star;     // on the grid tol·ℕ
  RInterval at;        // case_sum(s_star), certified < 1
  RInterval below;     // case_sum(s_star - tol)
};

// Smallest s on the grid tol·ℕ ∩ (0, 1] with case_sum(s) certified < 1, by
// bisection. Throws DomainError when even s = 1 fails.
Threshold solve_threshold(const CoverSystem& cs, const Rational& tol, const CoverOptions& options = {});

struct StatedCheck {
  StatedBound bound;
  Surd sup;
  bool holds = false;
};

std::vector<StatedCheck> check_stated_bounds(const CoverSystem& cs);

RInterval assemble_region_bound(const RInterval& dim_base, const Rational& s_star);

}  // namespace mlcf
