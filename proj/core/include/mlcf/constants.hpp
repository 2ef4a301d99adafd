#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mlcf/spectra.hpp"

namespace mlcf {

enum class ConstantKind {
  Cited,  // published result, used as stated
  Cap,    // heuristic dimension cap
};

std::string to_string(ConstantKind kind);

struct CitedConstant {
  std::string name;
  BlockBound value;  // text plus exact value ("0.531291", "sqrt(21)")
  ConstantKind kind = ConstantKind::Cited;
  std::string locus;
  std::string provenance;
};

struct ConstantTable {
  std::vector<CitedConstant> entries;

  const CitedConstant& find(std::string_view name) const;
  bool contains(std::string_view name) const;
  // Exact rational value; throws DomainError for irrational entries.
  Rational rational(std::string_view name) const;
};

// name | value | kind | locus | provenance
ConstantTable parse_constants(std::string_view text);
ConstantTable load_constants(const std::filesystem::path& path);

// Smallest multiple of 10^-places that is >= q.
Rational round_up(const Rational& q, int places);

}  // namespace mlcf
