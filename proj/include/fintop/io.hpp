#pragma once

// Topology documents.
//
// A document is a YAML mapping with a `points` list of labels and an `opens` list of
// label lists; the empty set is written []. An optional `name` names the space.
//
//   name: e33
//   points: [a, b, c]
//   opens: [[], [a, b], [a, b, c]]
//
// Several documents may share one stream, separated by `---` lines.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "fintop/error.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct TopologyDocument {
  std::string name;
  FiniteSpace space;
};

namespace detail {

inline std::string where(std::string_view source, const YAML::Mark& mark) {
  std::string out(source);
  if (mark.line >= 0) out += ":" + std::to_string(mark.line + 1);
  return out;
}

[[noreturn]] inline void fail_at(std::string_view source, const YAML::Node& node,
                                 const std::string& field, const std::string& what,
                                 ErrorKind kind = ErrorKind::Parse) {
  throw TopologyError(kind, where(source, node.Mark()) + ": field '" + field + "': " + what);
}

inline std::string scalar(std::string_view source, const YAML::Node& node,
                          const std::string& field) {
  if (!node.IsScalar()) fail_at(source, node, field, "expected a label");
  return node.as<std::string>();
}

inline TopologyDocument read_document(std::string_view source, const YAML::Node& doc,
                                      std::size_t point_limit) {
  if (!doc.IsMap()) fail_at(source, doc, "<document>", "expected a mapping with points and opens");
  TopologyDocument out;
  if (auto name = doc["name"]) out.name = scalar(source, name, "name");

  const YAML::Node points = doc["points"];
  if (!points) fail_at(source, doc, "points", "missing");
  if (!points.IsSequence()) fail_at(source, points, "points", "expected a list of labels");
  std::vector<std::string> names;
  for (const auto& p : points) names.push_back(scalar(source, p, "points"));

  const YAML::Node opens = doc["opens"];
  if (!opens) fail_at(source, doc, "opens", "missing");
  if (!opens.IsSequence()) fail_at(source, opens, "opens", "expected a list of label lists");
  std::vector<std::vector<std::string>> sets;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const YAML::Node set = opens[i];
    const std::string field = "opens[" + std::to_string(i) + "]";
    if (!set.IsSequence()) fail_at(source, set, field, "expected a list of labels");
    std::vector<std::string> labels;
    for (const auto& l : set) {
      labels.push_back(scalar(source, l, field));
      if (std::find(names.begin(), names.end(), labels.back()) == names.end()) {
        fail_at(source, l, field, "label '" + labels.back() + "' is not a point", ErrorKind::UnknownLabel);
      }
    }
    sets.push_back(std::move(labels));
  }
  try {
    out.space = build_space(std::move(names), sets, point_limit);
  } catch (const TopologyError& e) {
    throw TopologyError(e.kind(), where(source, opens.Mark()) + ": field 'opens': " + e.detail(),
                        e.witness());
  }
  return out;
}

}  // namespace detail

/// Parses every document in text. source names the input in error messages.
inline std::vector<TopologyDocument> parse_topologies(const std::string& text,
                                                      std::string_view source = "<input>",
                                                      std::size_t point_limit = kDefaultPointLimit) {
  std::vector<YAML::Node> docs;
  try {
    docs = YAML::LoadAll(text);
  } catch (const YAML::Exception& e) {
    throw TopologyError(ErrorKind::Parse, detail::where(source, e.mark) + ": " + e.msg);
  }
  std::vector<TopologyDocument> out;
  for (const auto& doc : docs) {
    if (doc.IsNull()) continue;
    out.push_back(detail::read_document(source, doc, point_limit));
  }
  if (out.empty()) throw TopologyError(ErrorKind::Parse, std::string(source) + ": no topology document");
  return out;
}

/// Parses text holding exactly one document.
inline TopologyDocument parse_topology(const std::string& text, std::string_view source = "<input>",
                                       std::size_t point_limit = kDefaultPointLimit) {
  auto docs = parse_topologies(text, source, point_limit);
  if (docs.size() != 1) {
    throw TopologyError(ErrorKind::Parse, std::string(source) + ": expected one document, found " +
                                              std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

/// Serializes one space as a single document, without a trailing separator.
inline std::string write_topology(const FiniteSpace& space, std::string_view name = {}) {
  YAML::Emitter emit;
  emit << YAML::BeginMap;
  if (!name.empty()) emit << YAML::Key << "name" << YAML::Value << std::string(name);
  emit << YAML::Key << "points" << YAML::Value << YAML::Flow << space.names();
  emit << YAML::Key << "opens" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (auto o : space.opens()) {
    emit << YAML::Flow << YAML::BeginSeq;
    o.for_each_point([&](std::size_t p) { emit << space.name(p); });
    emit << YAML::EndSeq;
  }
  emit << YAML::EndSeq << YAML::EndMap;
  return std::string(emit.c_str()) + "\n";
}

}  // namespace fintop
