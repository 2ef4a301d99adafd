#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlcf/ledger.hpp"

namespace mlcf {

struct Transition {
  std::size_t from = 0, to = 0;
  Digit digit = 0;  // last digit of the target state
};

// One-sided subshift of finite type over a digit alphabet, coded by words of
// length `depth`; state u goes to u[1:]·b whenever u·b avoids every forbidden word.
struct SubshiftSpec {
  std::string name;
  Alphabet alphabet;
  std::vector<Word> forbidden;
  std::size_t depth = 1;
  std::vector<Word> states;  // recurrent part only, sorted
  std::vector<Transition> transitions;

  bool empty() const { return states.empty(); }
};

// Throws ResourceError when more than max_states words of length depth survive.
SubshiftSpec build_subshift(const Alphabet& alphabet, const std::vector<Word>& forbidden, std::string name = {},
                            std::size_t max_states = 100000);

// Subshift file:
//   name: X3.13.31
//   alphabet: 123
//   forbidden: 13, 31
//   cap: 0.574          (optional upper value the estimate is compared against)
struct SubshiftFile {
  SubshiftSpec spec;
  std::optional<Rational> cap;
  std::string cap_text;
};
SubshiftFile parse_subshift_file(std::string_view text);
SubshiftFile load_subshift_file(const std::filesystem::path& path);
std::vector<SubshiftFile> load_subshift_files(const std::filesystem::path& dir);

struct DimOptions {
  int order = 8;  // polynomial degree per state
  double eig_tol = 1e-14;
  int max_iterations = 20000;
};

// Leading eigenvalue of the collocated transfer operator
//   (L_s f)_w(x) = Σ_{u → w} (u_0 + x)^{-2s} f_u(1 / (u_0 + x)),
// with f_u a degree-`order` Chebyshev interpolant on the cylinder of u.
// Returns 0 for an empty subshift.
double leading_eigenvalue(const SubshiftSpec& spec, double s, const DimOptions& options = {});

// Heuristic enclosure of P(s) = log(spectral radius): the hull of the values
// at `order` and 2·order. nullopt stands for -∞ (empty subshift).
std::optional<RInterval> pressure(const SubshiftSpec& spec, const Rational& s, int order = 8);

struct PressureSample {
  double s = 0;
  double value = 0;
  double width = 0;  // |P_N(s) - P_2N(s)|
};

struct PressureCurve {
  int order = 8;
  std::vector<PressureSample> samples;
};

PressureCurve pressure_curve(const SubshiftSpec& spec, const std::vector<double>& s_values, int order = 8);

struct DimensionEstimate {
  std::string name;
  double value = 0;        // root at 2·order
  double value_n = 0;      // root at order
  double uncertainty = 0;  // |value - value_n|
  int order = 8;
  static constexpr bool heuristic = true;
};

// Root of P(s) = 0 on [0, 1] by safeguarded secant (Illinois) iteration.
// Throws DomainError when P does not change sign on [0, 1].
DimensionEstimate dimension(const SubshiftSpec& spec, int order = 8, double tol = 1e-14);

// Root at a single order, no comparison.
double dimension_at(const SubshiftSpec& spec, int order, double tol = 1e-14);

// "name | estimate | order | uncertainty | HEURISTIC"
std::string dimension_record(const DimensionEstimate& e);
void append_dimension_record(const std::filesystem::path& path, const DimensionEstimate& e);

// Items whose words are "big": an occurrence forces λ_0 above j1. The
// forbidden list of Ω is read off these ledger claims.
inline const char* kOmegaItems[] = {"i",     "ii",     "v",     "vi",     "vii",     "x",      "xii",  "xiii",
                                    "xiv",   "xv",     "xvii",  "xxii",   "xxv",     "xxvi",   "xxviii", "xxix",
                                    "xxx",   "xxxi",   "xxxiii", "xxxv",  "xxxvi",   "xxxvii", "xxxviii", "xxxix"};
inline const char* kSelfReplicatingWord = "2332221233222123322";

struct OmegaSpec {
  std::vector<std::string> claims_used;
  std::vector<Word> words;  // with transposes, minimal under the factor order
  SubshiftSpec subshift;    // built only when requested (depth can be large)
  bool built = false;
  static constexpr bool interpretation = true;
};

// LOWER and DISJUNCTIVE ledger claims of the listed items (branch records
// "/b" excluded), every threshold above j1, read as the word of their known
// digits; plus the self-replicating word. Transposes are added and words
// containing another forbidden word are dropped.
OmegaSpec omega_spec(const Ledger& ledger, bool build = false);
std::string omega_spec_file(const OmegaSpec& spec);

}  // namespace mlcf
