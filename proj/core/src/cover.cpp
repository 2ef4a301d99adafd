#include "mlcf/cover.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "mlcf/error.hpp"
#include "mlcf/power.hpp"
#include "text.hpp"

namespace mlcf {

namespace {

Word drop(const Word& w, std::size_t front, std::size_t back) {
  if (front + back >= w.size()) return {};
  return Word(w.begin() + static_cast<long>(front), w.end() - static_cast<long>(back));
}

Surd rho_at(const RatioFunc& f, const Surd& r) {
  Surd num = r + Surd(Rational(1));
  Surd den = (Surd(Rational(f.A)) * r + Surd(Rational(f.B))) * (Surd(Rational(f.C)) * r + Surd(Rational(f.D)));
  return num / den;
}

Rational parse_value(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_rational(text);
  Rational den = parse_rational(detail::trim(std::string_view(text).substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in " + text, slash);
  return Rational(parse_rational(detail::trim(std::string_view(text).substr(0, slash))) / den);
}

RInterval sup_power(const Surd& sup, const Rational& s, long bits) {
  return pow_enclosure(sup.enclose(pow2(-(bits + 32))), s, bits);
}

struct Box {
  Rational r0, r1;
  Rational upper;
  bool operator<(const Box& o) const { return upper < o.upper; }
};

// Enclosure of ρ' over [r0, r1]: the numerator -AC r² - 2AC r + (BD - AD - BC)
// decreases on r ≥ 0 and the squared denominator increases.
RInterval derivative_over(const RatioFunc& f, const Rational& r0, const Rational& r1) {
  auto num = [&](const Rational& r) {
    return Rational(-f.A * f.C * r * r - 2 * f.A * f.C * r + (f.B * f.D - f.A * f.D - f.B * f.C));
  };
  auto den = [&](const Rational& r) {
    Rational d = (f.A * r + f.B) * (f.C * r + f.D);
    return Rational(d * d);
  };
  return RInterval(num(r1), num(r0)) / RInterval(den(r0), den(r1));
}

RInterval joint_sum(const std::vector<RatioFunc>& fs, const Rational& s, const CoverOptions& opt) {
  auto value_at = [&](const Rational& r) {
    RInterval v(Rational(0));
    for (const auto& f : fs) v += pow_enclosure(RInterval(f(r)), s, opt.bits);
    return v;
  };
  // min of the direct box bound and the mean value bound around the midpoint
  auto upper_on = [&](const Rational& r0, const Rational& r1) {
    Rational mid = (r0 + r1) / 2, half = (r1 - r0) / 2;
    Rational direct = 0;
    RInterval slope(Rational(0));
    for (const auto& f : fs) {
      RInterval rho = f.over(r0, r1);
      RInterval p = pow_enclosure(rho, s, opt.bits);
      direct += p.hi();
      slope += RInterval(s) * p / rho * derivative_over(f, r0, r1);
    }
    Rational reach = std::max(slope.hi(), Rational(-slope.lo())) * half;
    return std::min(direct, Rational(value_at(mid).hi() + reach));
  };
  Rational best = std::max(value_at(0).lo(), value_at(1).lo());
  std::priority_queue<Box> queue;
  queue.push(Box{0, 1, upper_on(0, 1)});
  for (int iter = 0; iter < 4096; ++iter) {
    Box top = queue.top();
    if (top.upper - best <= opt.joint_tol) break;
    queue.pop();
    Rational mid = (top.r0 + top.r1) / 2;
    best = std::max(best, value_at(mid).lo());
    queue.push(Box{top.r0, mid, upper_on(top.r0, mid)});
    queue.push(Box{mid, top.r1, upper_on(mid, top.r1)});
  }
  return RInterval(best, std::max(best, queue.top().upper));
}

}  // namespace

Rational RatioFunc::operator()(const Rational& r) const {
  return Rational((r + 1) / ((A * r + B) * (C * r + D)));
}

RInterval RatioFunc::over(const Rational& r0, const Rational& r1) const {
  Rational lo = (r0 + 1) / ((A * r1 + B) * (C * r1 + D));
  Rational hi = (r1 + 1) / ((A * r0 + B) * (C * r0 + D));
  return RInterval(lo, hi);
}

RatioFunc ratio_function(const Word& w) {
  if (w.empty()) throw DomainError("ratio_function needs a nonempty word");
  RatioFunc f;
  f.B = continuant_value(w);
  f.A = continuant_value(drop(w, 1, 0));
  f.D = continuant_value(drop(w, 0, 1)) + f.B;
  f.C = f.A + (w.size() >= 2 ? continuant_value(drop(w, 1, 1)) : Int(0));
  f.source_word = w;
  return f;
}

Rational cylinder_length(const Word& w) {
  Mobius m = convergent_matrix(0, w);
  // m = [[p_n, p_{n-1}], [q_n, q_{n-1}]]
  return Rational(1, 1) / Rational(m.c * (m.c + m.d));
}

Rational prefix_ratio(const Word& prefix) {
  Mobius m = convergent_matrix(0, prefix);
  return Rational(m.d, m.c);
}

SupRatio sup_ratio(const RatioFunc& f) {
  std::vector<std::pair<Surd, bool>> candidates{{Surd(Rational(0)), false}, {Surd(Rational(1)), false}};
  // ρ' has numerator -AC r² - 2AC r + (BD - AD - BC); its root in r > -1 is -1 + sqrt(1 + q).
  Rational disc = 1 + Rational(f.B * f.D - f.A * f.D - f.B * f.C) / Rational(f.A * f.C);
  if (disc >= 0) {
    Surd root = disc == 0 ? Surd(Rational(0)) : Surd(Rational(0), Rational(1, disc.get_den()), Int(disc.get_num() * disc.get_den()));
    Surd r = root - Surd(Rational(1));
    if (compare(r, Rational(0)) > 0 && compare(r, Rational(1)) < 0) candidates.emplace_back(r, true);
  }
  SupRatio best{rho_at(f, candidates[0].first), candidates[0].first, false};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Surd v = rho_at(f, candidates[i].first);
    if (compare(v, best.value) > 0) best = SupRatio{v, candidates[i].first, candidates[i].second};
  }
  return best;
}

CoverSystem parse_cover_system(std::string_view text) {
  CoverSystem cs;
  bool have_s = false, have_margin = false, have_region = false;
  for (const auto& [n, line] : detail::content_lines(text)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("cover line " + std::to_string(n) + ": expected key: value", n);
    std::string key = detail::trim(std::string_view(line).substr(0, colon));
    std::string value = detail::trim(std::string_view(line).substr(colon + 1));
    if (key == "id") {
      cs.id = value;
    } else if (key == "label") {
      cs.label = value;
    } else if (key == "region") {
      auto ends = detail::split(value, ',');
      if (ends.size() != 2) throw ParseError("cover line " + std::to_string(n) + ": region needs two endpoints", n);
      cs.region_lo = parse_bound(ends[0]);
      cs.region_hi = parse_bound(ends[1]);
      have_region = true;
    } else if (key.rfind("case", 0) == 0) {
      CoverCase c;
      c.name = detail::trim(std::string_view(key).substr(4));
      for (const auto& w : detail::split(value, ',')) c.words.push_back(parse_word(w));
      if (c.words.empty()) throw ParseError("cover line " + std::to_string(n) + ": empty case", n);
      cs.cases.push_back(std::move(c));
    } else if (key == "s") {
      cs.s = parse_rational(value);
      have_s = true;
    } else if (key == "margin") {
      cs.margin = parse_rational(value);
      have_margin = true;
    } else if (key == "base") {
      cs.base = value;
    } else if (key == "kind") {
      if (value != "rigorous" && value != "heuristic") throw ParseError("cover line " + std::to_string(n) + ": unknown kind " + value, n);
      cs.heuristic = value == "heuristic";
    } else if (key == "stated") {
      StatedBound b;
      auto op = value.find('<');
      if (op == std::string::npos) throw ParseError("cover line " + std::to_string(n) + ": stated bound needs < or <=", n);
      b.word = parse_word(detail::trim(std::string_view(value).substr(0, op)));
      std::size_t rest = op + 1;
      b.strict = true;
      if (rest < value.size() && value[rest] == '=') {
        b.strict = false;
        ++rest;
      }
      b.text = detail::trim(std::string_view(value).substr(rest));
      b.value = parse_value(b.text);
      cs.stated.push_back(std::move(b));
    } else if (key == "block") {
      cs.block = value;
    } else if (key == "round") {
      if (value != "exact") cs.round_places = std::stoi(value);
    } else if (key == "note") {
      cs.notes.push_back(value);
    } else {
      throw ParseError("cover line " + std::to_string(n) + ": unknown key " + key, n);
    }
  }
  if (cs.id.empty() || !have_region || !have_s || !have_margin || cs.cases.empty()) {
    throw ParseError("cover system needs id, region, s, margin and at least one case", 0);
  }
  if (cs.label.empty()) cs.label = "(" + cs.region_lo.text + "," + cs.region_hi.text + ")";
  return cs;
}

CoverSystem load_cover_system(const std::filesystem::path& path) { return parse_cover_system(detail::read_file(path)); }

std::vector<CoverSystem> load_cover_systems(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CoverSystem> out;
  for (const auto& f : files) out.push_back(load_cover_system(f));
  return out;
}

std::vector<CaseSum> case_sums(const CoverSystem& cs, const Rational& s, const CoverOptions& options) {
  if (s < 0 || s > 1) throw DomainError("case_sum needs 0 <= s <= 1");
  std::vector<CaseSum> out;
  std::map<Word, Surd> sups;
  for (const auto& c : cs.cases) {
    if (options.mode == CoverMode::Joint) {
      std::vector<RatioFunc> fs;
      for (const auto& w : c.words) fs.push_back(ratio_function(w));
      out.push_back(CaseSum{c.name, joint_sum(fs, s, options)});
      continue;
    }
    RInterval sum(Rational(0));
    for (const auto& w : c.words) {
      auto it = sups.find(w);
      if (it == sups.end()) it = sups.emplace(w, sup_ratio(ratio_function(w)).value).first;
      sum += sup_power(it->second, s, options.bits);
    }
    out.push_back(CaseSum{c.name, sum});
  }
  return out;
}

RInterval case_sum(const CoverSystem& cs, const Rational& s, const CoverOptions& options) {
  auto sums = case_sums(cs, s, options);
  RInterval m = sums.front().value;
  for (std::size_t i = 1; i < sums.size(); ++i) m = max(m, sums[i].value);
  return m;
}

Threshold solve_threshold(const CoverSystem& cs, const Rational& tol, const CoverOptions& options) {
  if (tol <= 0 || tol > 1) throw DomainError("solve_threshold needs 0 < tol <= 1");
  Int n = ceil(Rational(1 / tol));
  auto grid = [&](const Int& k) { return std::min(Rational(k * tol), Rational(1)); };
  RInterval top = case_sum(cs, grid(n), options);
  if (!top.certainly_below(Rational(1))) {
    throw DomainError(cs.id + ": no s in (0,1] brings the case sums below 1");
  }
  Int lo = 0, hi = n;
  RInterval at = top;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    RInterval v = case_sum(cs, grid(mid), options);
    if (v.certainly_below(Rational(1))) {
      hi = mid;
      at = v;
    } else {
      lo = mid;
    }
  }
  return Threshold{grid(hi), at, case_sum(cs, grid(hi - 1), options)};
}

std::vector<StatedCheck> check_stated_bounds(const CoverSystem& cs) {
  std::vector<StatedCheck> out;
  for (const auto& b : cs.stated) {
    Surd sup = sup_ratio(ratio_function(b.word)).value;
    int c = compare(sup, b.value);
    out.push_back(StatedCheck{b, sup, b.strict ? c < 0 : c <= 0});
  }
  return out;
}

RInterval assemble_region_bound(const RInterval& dim_base, const Rational& s_star) {
  return dim_base + RInterval(s_star);
}

}  // namespace mlcf
