#include "ordlat/document.hpp"

#include <json.hpp>

#include "ordlat/error.hpp"

namespace ordlat {

using json = nlohmann::ordered_json;

std::string_view to_string(DocumentKind kind) { return kind == DocumentKind::lattice ? "lattice" : "poset"; }

PosetDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::parse_error, e.what());
  }
  auto fail = [](const std::string& why) { raise(ErrorKind::parse_error, why); };
  if (!j.is_object()) fail("document must be a JSON object");

  PosetDocument doc;
  if (!j.contains("schema_version") || !j["schema_version"].is_string()) fail("missing string schema_version");
  doc.schema_version = j["schema_version"].get<std::string>();
  if (doc.schema_version != "1") fail("unsupported schema_version '" + doc.schema_version + "'");

  if (!j.contains("kind") || !j["kind"].is_string()) fail("missing string kind");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "poset") doc.kind = DocumentKind::poset;
  else if (kind == "lattice") doc.kind = DocumentKind::lattice;
  else fail("kind must be 'poset' or 'lattice', got '" + kind + "'");

  if (!j.contains("size") || !j["size"].is_number_unsigned()) fail("missing non-negative integer size");
  doc.size = j["size"].get<std::size_t>();

  if (j.contains("labels")) {
    const auto& labels = j["labels"];
    if (!labels.is_array() || labels.size() != doc.size) fail("labels must be an array of size entries");
    std::vector<std::string> out;
    for (const auto& l : labels) {
      if (!l.is_string()) fail("labels must be strings");
      out.push_back(l.get<std::string>());
    }
    doc.labels = std::move(out);
  }

  if (!j.contains("leq_pairs") || !j["leq_pairs"].is_array()) fail("missing array leq_pairs");
  for (const auto& pair : j["leq_pairs"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
      fail("each leq pair must be [i, j] with non-negative integers");
    const auto a = pair[0].get<std::size_t>(), b = pair[1].get<std::size_t>();
    if (a >= doc.size || b >= doc.size)
      fail("pair [" + std::to_string(a) + "," + std::to_string(b) + "] out of range for size " + std::to_string(doc.size));
    doc.leq_pairs.emplace_back(a, b);
  }
  return doc;
}

std::string serialize(const PosetDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = std::string(to_string(doc.kind));
  j["size"] = doc.size;
  if (doc.labels) j["labels"] = *doc.labels;
  json pairs = json::array();
  for (const auto& [a, b] : doc.leq_pairs) pairs.push_back({a, b});
  j["leq_pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

Poset to_poset(const PosetDocument& doc) {
  return Poset::from_pairs(doc.size, doc.leq_pairs, doc.labels.value_or(std::vector<std::string>{}));
}

PosetDocument to_document(const Poset& p, DocumentKind kind) {
  PosetDocument doc;
  doc.kind = kind;
  doc.size = p.size();
  doc.labels = p.labels();
  doc.leq_pairs = p.covers();
  return doc;
}

}  // namespace ordlat
