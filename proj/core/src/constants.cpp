#include "mlcf/constants.hpp"

#include "mlcf/error.hpp"
#include "text.hpp"

namespace mlcf {

std::string to_string(ConstantKind kind) { return kind == ConstantKind::Cited ? "cited" : "cap"; }

const CitedConstant& ConstantTable::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown constant " + std::string(name));
}

bool ConstantTable::contains(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return true;
  }
  return false;
}

Rational ConstantTable::rational(std::string_view name) const {
  const Real& v = find(name).value.value;
  if (!v.is_surd() || !v.as_surd().is_rational()) throw DomainError(std::string(name) + " is not rational");
  return v.as_surd().a();
}

ConstantTable parse_constants(std::string_view text) {
  ConstantTable t;
  for (const auto& [n, line] : detail::content_lines(text)) {
    auto f = detail::split(line, '|');
    if (f.size() != 5) throw ParseError("constants line " + std::to_string(n) + ": expected 5 fields", n);
    CitedConstant c;
    c.name = f[0];
    c.value = parse_bound(f[1]);
    if (f[2] == "cited") {
      c.kind = ConstantKind::Cited;
    } else if (f[2] == "cap") {
      c.kind = ConstantKind::Cap;
    } else {
      throw ParseError("constants line " + std::to_string(n) + ": unknown kind " + f[2], n);
    }
    c.locus = f[3];
    c.provenance = f[4];
    if (t.contains(c.name)) throw ParseError("constants line " + std::to_string(n) + ": duplicate " + c.name, n);
    t.entries.push_back(std::move(c));
  }
  return t;
}

ConstantTable load_constants(const std::filesystem::path& path) { return parse_constants(detail::read_file(path)); }

Rational round_up(const Rational& q, int places) {
  Rational unit = pow10(-places);
  return Rational(Rational(ceil(Rational(q / unit))) * unit);
}

}  // namespace mlcf
