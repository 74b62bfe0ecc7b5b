#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordlat/poset.hpp"

namespace ordlat {

enum class DocumentKind { poset, lattice };

// On-disk form of a poset or lattice: JSON object
//   {"schema_version": "1", "kind": "poset"|"lattice", "size": n,
//    "labels": [...] (optional), "leq_pairs": [[i, j], ...]}
// leq_pairs are generating pairs; readers close them.
struct PosetDocument {
  std::string schema_version = "1";
  DocumentKind kind = DocumentKind::poset;
  std::size_t size = 0;
  std::optional<std::vector<std::string>> labels;
  std::vector<Pair> leq_pairs;
};

// Throws Error(parse_error) on malformed JSON, schema violations, or
// out-of-range indices.
PosetDocument parse_document(std::string_view text);
std::string serialize(const PosetDocument& doc);

// Closure of the generating pairs; may throw antisymmetry_violation.
Poset to_poset(const PosetDocument& doc);
// Writes the Hasse covers as generating pairs and always includes labels.
PosetDocument to_document(const Poset& p, DocumentKind kind);

std::string_view to_string(DocumentKind kind);

}  // namespace ordlat
