#include "mlcf/dim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "mlcf/error.hpp"
#include "mlcf/spectra.hpp"
#include "text.hpp"

namespace mlcf {

namespace {

bool contains_factor(const Word& w, const Word& f) {
  return !f.empty() && std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

bool avoids(const Word& w, const std::vector<Word>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(), [&](const Word& f) { return contains_factor(w, f); });
}

// Words of length `len` avoiding the forbidden list, extended digit by digit.
void admissible_words(const Alphabet& a, std::size_t len, const std::vector<Word>& forbidden, std::size_t budget,
                      Word& cur, std::vector<Word>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    if (out.size() > budget) throw ResourceError("subshift state budget exceeded", out.size());
    return;
  }
  for (Digit d : a.digits()) {
    cur.push_back(d);
    bool ok = std::none_of(forbidden.begin(), forbidden.end(), [&](const Word& f) {
      return f.size() <= cur.size() && std::equal(f.rbegin(), f.rend(), cur.rbegin());
    });
    if (ok) admissible_words(a, len, forbidden, budget, cur, out);
    cur.pop_back();
  }
}

// Chebyshev points of the second kind on [lo, hi] with barycentric weights.
struct ChebGrid {
  double lo = 0, hi = 1;
  std::vector<double> nodes, weights;

  ChebGrid(double a, double b, int order) : lo(a), hi(b) {
    for (int j = 0; j <= order; ++j) {
      double t = std::cos(std::numbers::pi * j / order);
      nodes.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * t);
      double w = (j % 2 == 0) ? 1.0 : -1.0;
      if (j == 0 || j == order) w *= 0.5;
      weights.push_back(w);
    }
  }

  // Coefficients c_j with p(y) = Σ c_j p(node_j).
  std::vector<double> row(double y) const {
    std::vector<double> c(nodes.size(), 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (y == nodes[j]) {
        c[j] = 1.0;
        return c;
      }
    }
    double total = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      c[j] = weights[j] / (y - nodes[j]);
      total += c[j];
    }
    for (double& v : c) v /= total;
    return c;
  }
};

std::pair<double, double> cylinder(const Word& u) {
  Mobius m = convergent_matrix(0, u);
  double a = Rational(m.a, m.c).get_d();
  double b = Rational(m.a + m.b, m.c + m.d).get_d();
  return {std::min(a, b), std::max(a, b)};
}

std::vector<double> operator_matrix(const SubshiftSpec& spec, double s, int order) {
  std::size_t m = static_cast<std::size_t>(order) + 1;
  std::size_t n = spec.states.size() * m;
  std::vector<ChebGrid> grids;
  for (const auto& u : spec.states) {
    auto [lo, hi] = cylinder(u);
    grids.emplace_back(lo, hi, order);
  }
  std::vector<double> mat(n * n, 0.0);
  for (const auto& t : spec.transitions) {
    Digit a = spec.states[t.from].front();
    for (std::size_t k = 0; k < m; ++k) {
      double x = grids[t.to].nodes[k];
      double weight = std::pow(a + x, -2.0 * s);
      auto r = grids[t.from].row(1.0 / (a + x));
      double* out = &mat[(t.to * m + k) * n + t.from * m];
      for (std::size_t j = 0; j < m; ++j) out[j] += weight * r[j];
    }
  }
  return mat;
}

double power_iteration(const std::vector<double>& mat, std::size_t n, const DimOptions& opt) {
  std::vector<double> v(n, 1.0), w(n);
  double lambda = 0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0;
      const double* row = &mat[i * n];
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
      w[i] = acc;
    }
    double norm = 0;
    for (double x : w) norm = std::max(norm, std::abs(x));
    if (norm == 0) return 0;
    double sum_w = 0, sum_v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum_w += w[i];
      sum_v += v[i];
    }
    double next = sum_w / sum_v;
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double x = w[i] / norm;
      change = std::max(change, std::abs(x - v[i]));
      v[i] = x;
    }
    bool settled = std::abs(next - lambda) <= opt.eig_tol * std::abs(next) && change <= 1e3 * opt.eig_tol;
    lambda = next;
    if (settled) break;
  }
  return lambda;
}

std::string roman_item(const std::string& id) {
  if (id.size() < 3 || id[0] != 'l' || !std::isdigit(static_cast<unsigned char>(id[1]))) return {};
  auto dot = id.find('.');
  if (dot == std::string::npos) return {};
  auto end = id.find_first_of("./^", dot + 1);
  return id.substr(dot + 1, end == std::string::npos ? std::string::npos : end - dot - 1);
}

}  // namespace

SubshiftSpec build_subshift(const Alphabet& alphabet, const std::vector<Word>& forbidden, std::string name,
                            std::size_t max_states) {
  SubshiftSpec spec;
  spec.name = std::move(name);
  spec.alphabet = alphabet;
  spec.forbidden = forbidden;
  std::size_t longest = 0;
  for (const auto& f : forbidden) longest = std::max(longest, f.size());
  spec.depth = std::max<std::size_t>(1, longest == 0 ? 1 : longest - 1);

  std::vector<Word> states;
  Word cur;
  admissible_words(alphabet, spec.depth, forbidden, max_states, cur, states);
  // Prune states without successors or predecessors until stable.
  std::set<Word> alive(states.begin(), states.end());
  auto successors = [&](const Word& u) {
    std::vector<std::pair<Word, Digit>> out;
    for (Digit b : alphabet.digits()) {
      Word ub = u;
      ub.push_back(b);
      if (!avoids(ub, forbidden)) continue;
      Word w(ub.begin() + 1, ub.end());
      if (alive.count(w)) out.emplace_back(std::move(w), b);
    }
    return out;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::map<Word, int> indegree;
    for (const auto& u : alive) {
      for (const auto& [w, b] : successors(u)) ++indegree[w];
    }
    for (auto it = alive.begin(); it != alive.end();) {
      if (successors(*it).empty() || indegree[*it] == 0) {
        it = alive.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  spec.states.assign(alive.begin(), alive.end());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < spec.states.size(); ++i) index[spec.states[i]] = i;
  for (std::size_t i = 0; i < spec.states.size(); ++i) {
    for (const auto& [w, b] : successors(spec.states[i])) spec.transitions.push_back(Transition{i, index.at(w), b});
  }
  return spec;
}

SubshiftFile parse_subshift_file(std::string_view text) {
  SubshiftFile file;
  std::string name;
  std::optional<Alphabet> alphabet;
  std::vector<Word> forbidden;
  for (const auto& [n, line] : detail::content_lines(text)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("subshift line " + std::to_string(n) + ": expected key: value", n);
    std::string key = detail::trim(std::string_view(line).substr(0, colon));
    std::string value = detail::trim(std::string_view(line).substr(colon + 1));
    if (key == "name") {
      name = value;
    } else if (key == "alphabet") {
      alphabet = Alphabet::parse(value);
    } else if (key == "forbidden") {
      if (value.empty() || value == "-") continue;
      for (const auto& w : detail::split(value, ',')) forbidden.push_back(parse_word(w));
    } else if (key == "cap") {
      file.cap = parse_rational(value);
      file.cap_text = value;
    } else {
      throw ParseError("subshift line " + std::to_string(n) + ": unknown key " + key, n);
    }
  }
  if (!alphabet) throw ParseError("subshift file needs an alphabet", 0);
  for (const auto& w : forbidden) {
    if (!alphabet->admits(w)) throw ParseError("forbidden word " + to_string(w) + " leaves the alphabet", 0);
  }
  file.spec = build_subshift(*alphabet, forbidden, name);
  return file;
}

SubshiftFile load_subshift_file(const std::filesystem::path& path) { return parse_subshift_file(detail::read_file(path)); }

std::vector<SubshiftFile> load_subshift_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SubshiftFile> out;
  for (const auto& f : files) out.push_back(load_subshift_file(f));
  return out;
}

double leading_eigenvalue(const SubshiftSpec& spec, double s, const DimOptions& options) {
  if (spec.empty()) return 0;
  if (options.order < 2) throw DomainError("collocation order must be at least 2");
  std::size_t n = spec.states.size() * (static_cast<std::size_t>(options.order) + 1);
  return power_iteration(operator_matrix(spec, s, options.order), n, options);
}

std::optional<RInterval> pressure(const SubshiftSpec& spec, const Rational& s, int order) {
  if (spec.empty()) return std::nullopt;
  if (s < 0 || s > 1) throw DomainError("pressure needs 0 <= s <= 1");
  DimOptions a, b;
  a.order = order;
  b.order = 2 * order;
  double pa = std::log(leading_eigenvalue(spec, s.get_d(), a));
  double pb = std::log(leading_eigenvalue(spec, s.get_d(), b));
  return RInterval(Rational(std::min(pa, pb)), Rational(std::max(pa, pb)));
}

PressureCurve pressure_curve(const SubshiftSpec& spec, const std::vector<double>& s_values, int order) {
  PressureCurve curve;
  curve.order = order;
  DimOptions a, b;
  a.order = order;
  b.order = 2 * order;
  for (double s : s_values) {
    double pa = std::log(leading_eigenvalue(spec, s, a));
    double pb = std::log(leading_eigenvalue(spec, s, b));
    curve.samples.push_back(PressureSample{s, pb, std::abs(pa - pb)});
  }
  return curve;
}

double dimension_at(const SubshiftSpec& spec, int order, double tol) {
  if (spec.empty()) throw DomainError("dimension of an empty subshift");
  DimOptions opt;
  opt.order = order;
  auto p = [&](double s) { return std::log(leading_eigenvalue(spec, s, opt)); };
  double a = 0, b = 1, fa = p(a), fb = p(b);
  if (!(fa > 0 && fb < 0)) throw DomainError(spec.name + ": pressure does not change sign on [0, 1]");
  int side = 0;
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    double c = (a * fb - b * fa) / (fb - fa);
    if (!(c > a && c < b)) c = 0.5 * (a + b);
    double fc = p(c);
    if (fc == 0) return c;
    if (fc > 0) {
      a = c;
      fa = fc;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = c;
      fb = fc;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
    if (std::abs(fc) < 1e-15) return c;
  }
  return 0.5 * (a + b);
}

DimensionEstimate dimension(const SubshiftSpec& spec, int order, double tol) {
  DimensionEstimate e;
  e.name = spec.name;
  e.order = order;
  e.value_n = dimension_at(spec, order, tol);
  e.value = dimension_at(spec, 2 * order, tol);
  e.uncertainty = std::abs(e.value - e.value_n);
  return e;
}

std::string dimension_record(const DimensionEstimate& e) {
  std::ostringstream out;
  out.precision(17);
  out << e.name << " | " << e.value << " | " << e.order << " | " << e.uncertainty << " | HEURISTIC";
  return out.str();
}

void append_dimension_record(const std::filesystem::path& path, const DimensionEstimate& e) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot append to " + path.string());
  out << dimension_record(e) << "\n";
}

OmegaSpec omega_spec(const Ledger& ledger, bool build) {
  OmegaSpec out;
  std::set<std::string> items(std::begin(kOmegaItems), std::end(kOmegaItems));
  Rational j1_hi = interval_J().hi.enclose(pow10(-30)).hi();
  std::set<Word> words;
  for (const Claim& c : ledger.claims) {
    if (c.kind == ClaimKind::Upper || c.id.find('/') != std::string::npos) continue;
    if (!items.count(roman_item(c.id))) continue;
    if (!std::all_of(c.thresholds.begin(), c.thresholds.end(), [&](const Rational& t) { return t > j1_hi; })) continue;
    const WindowPattern& p = c.pattern;
    if (!p.left_tail.empty() || !p.right_tail.empty()) continue;
    Word w;
    bool gap = false;
    for (long i = p.min_known(); i <= p.max_known(); ++i) {
      auto d = p.digit(i);
      if (!d) {
        gap = true;
        break;
      }
      w.push_back(*d);
    }
    if (gap) continue;
    out.claims_used.push_back(c.id);
    words.insert(w);
    words.insert(reversed(w));
  }
  Word seed = parse_word(kSelfReplicatingWord);
  words.insert(seed);
  words.insert(reversed(seed));
  for (const auto& w : words) {
    bool redundant = std::any_of(words.begin(), words.end(), [&](const Word& f) { return f != w && contains_factor(w, f); });
    if (!redundant) out.words.push_back(w);
  }
  std::sort(out.words.begin(), out.words.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (build) {
    out.subshift = build_subshift(Alphabet{1, 2, 3}, out.words, "Omega");
    out.built = true;
  }
  return out;
}

std::string omega_spec_file(const OmegaSpec& spec) {
  std::ostringstream out;
  out << "# Generated from the ledger: forbidden words of Omega, read as the known\n"
      << "# digits of the claims below and their transposes, plus the\n"
      << "# self-replicating word. This list is an interpretation.\n";
  out << "# claims:";
  for (const auto& id : spec.claims_used) out << " " << id;
  out << "\nname: Omega\nalphabet: 123\nforbidden: ";
  for (std::size_t i = 0; i < spec.words.size(); ++i) out << (i ? ", " : "") << to_string(spec.words[i]);
  out << "\n";
  return out.str();
}

}  // namespace mlcf
