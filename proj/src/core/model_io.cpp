#include "beliefnet/core/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "beliefnet/core/error.hpp"
#include "beliefnet/util/log.hpp"
#include "json.hpp"

namespace beliefnet {

using Json = nlohmann::ordered_json;

std::string serialize(const FittedNetwork& net) {
  Json doc;
  doc["format"] = kModelFormat;
  doc["version"] = kModelVersion;

  Json variables = Json::array();
  for (const auto& v : net.variables()) {
    variables.push_back(
        {{"name", v.name()}, {"levels", v.levels()}, {"ordinal", v.ordinal()}});
  }
  doc["variables"] = std::move(variables);

  Json arcs = Json::array();
  for (const auto& arc : net.dag().arcs()) {
    arcs.push_back({net.dag().name(arc.from), net.dag().name(arc.to)});
  }
  doc["arcs"] = std::move(arcs);

  Json cpts = Json::array();
  for (const auto& cpt : net.cpts()) {
    Json parents = Json::array();
    for (int p : cpt.parents) parents.push_back(net.variable(p).name());
    Json rows = Json::array();
    for (int j = 0; j < cpt.rows(); ++j) {
      Json row = Json::array();
      for (int k = 0; k < cpt.states(); ++k) row.push_back(cpt.table(j, k));
      rows.push_back(std::move(row));
    }
    cpts.push_back({{"variable", net.variable(cpt.node).name()},
                    {"parents", std::move(parents)},
                    {"rows", std::move(rows)}});
  }
  doc["cpts"] = std::move(cpts);

  Json metadata = Json::object();
  for (const auto& [key, value] : net.metadata()) metadata[key] = value;
  doc["metadata"] = std::move(metadata);
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::MalformedFile, where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) malformed(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) malformed(where, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array");
  return j;
}

}  // namespace

FittedNetwork deserialize(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedFile,
                "byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
  if (as_string(member(doc, "format", "/"), "/format") != kModelFormat) {
    malformed("/format", "not a beliefnet model");
  }
  const Json& version = member(doc, "version", "/");
  if (!version.is_number_integer()) malformed("/version", "expected an integer");
  if (version.get<int>() != kModelVersion) {
    throw Error(ErrorKind::VersionMismatch,
                "model version " + std::to_string(version.get<int>()) +
                    ", this build reads version " +
                    std::to_string(kModelVersion));
  }

  std::vector<Variable> variables;
  std::vector<std::string> names;
  const Json& vars = as_array(member(doc, "variables", "/"), "/variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string where = "/variables/" + std::to_string(i);
    std::string name = as_string(member(vars[i], "name", where), where + "/name");
    std::vector<std::string> levels;
    const Json& lv = as_array(member(vars[i], "levels", where), where + "/levels");
    for (std::size_t k = 0; k < lv.size(); ++k) {
      levels.push_back(as_string(lv[k], where + "/levels/" + std::to_string(k)));
    }
    bool ordinal = false;
    if (auto it = vars[i].find("ordinal"); it != vars[i].end()) {
      if (!it->is_boolean()) malformed(where + "/ordinal", "expected a boolean");
      ordinal = it->get<bool>();
    }
    try {
      variables.emplace_back(name, std::move(levels), ordinal);
    } catch (const Error& e) {
      malformed(where, e.what());
    }
    names.push_back(std::move(name));
  }

  Dag dag;
  try {
    dag = Dag(names);
  } catch (const Error& e) {
    malformed("/variables", e.what());
  }

  const Json& cpts = as_array(member(doc, "cpts", "/"), "/cpts");
  if (cpts.size() != variables.size()) {
    malformed("/cpts", "expected one CPT per variable");
  }
  std::vector<ProbabilityMatrix> tables(variables.size());
  std::vector<char> seen(variables.size(), 0);
  for (std::size_t c = 0; c < cpts.size(); ++c) {
    const std::string where = "/cpts/" + std::to_string(c);
    const std::string name =
        as_string(member(cpts[c], "variable", where), where + "/variable");
    auto node = dag.find(name);
    if (!node) malformed(where + "/variable", "unknown variable '" + name + "'");
    if (seen[*node]) malformed(where, "second CPT for '" + name + "'");
    seen[*node] = 1;

    const Json& parents =
        as_array(member(cpts[c], "parents", where), where + "/parents");
    int q = 1;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      const std::string pw = where + "/parents/" + std::to_string(p);
      const std::string pname = as_string(parents[p], pw);
      auto pi = dag.find(pname);
      if (!pi) malformed(pw, "unknown parent '" + pname + "'");
      try {
        dag.add_arc(*pi, *node);
      } catch (const Error& e) {
        malformed(pw, e.what());
      }
      q *= variables[*pi].cardinality();
    }

    const int r = variables[*node].cardinality();
    const Json& rows = as_array(member(cpts[c], "rows", where), where + "/rows");
    if (static_cast<int>(rows.size()) != q) {
      malformed(where + "/rows", "expected " + std::to_string(q) + " rows");
    }
    ProbabilityMatrix table(q, r);
    for (int j = 0; j < q; ++j) {
      const std::string rw = where + "/rows/" + std::to_string(j);
      const Json& row = as_array(rows[j], rw);
      if (static_cast<int>(row.size()) != r) {
        malformed(rw, "expected " + std::to_string(r) + " entries");
      }
      for (int k = 0; k < r; ++k) {
        if (!row[k].is_number()) malformed(rw, "expected a number");
        table(j, k) = row[k].get<double>();
      }
      if ((table.row(j).array() < 0.0).any() ||
          (table.row(j).array() > 1.0).any()) {
        malformed(rw, "probability outside [0,1]");
      }
      const double deviation = std::abs(table.row(j).sum() - 1.0);
      if (deviation > 1e-9) {
        malformed(rw, "row does not sum to 1");
      } else if (deviation > kRowSumTolerance) {
        log::warn("model row " + rw + " renormalized (deviation " +
                  std::to_string(deviation) + ")");
        table.row(j) /= table.row(j).sum();
      }
    }
    tables[*node] = std::move(table);
  }

  // The arc list is redundant with the CPT parents and must agree with them.
  const Json& arcs = as_array(member(doc, "arcs", "/"), "/arcs");
  std::size_t listed = 0;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::string where = "/arcs/" + std::to_string(a);
    const Json& arc = as_array(arcs[a], where);
    if (arc.size() != 2) malformed(where, "expected [from, to]");
    const std::string from = as_string(arc[0], where + "/0");
    const std::string to = as_string(arc[1], where + "/1");
    auto fi = dag.find(from);
    auto ti = dag.find(to);
    if (!fi || !ti || !dag.has_arc(*fi, *ti)) {
      malformed(where, "arc " + from + " -> " + to + " not among CPT parents");
    }
    ++listed;
  }
  if (listed != dag.arc_count()) {
    malformed("/arcs", "arc list does not match CPT parents");
  }

  Metadata metadata;
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) malformed("/metadata", "expected an object");
    for (const auto& [key, value] : it->items()) {
      metadata[key] = as_string(value, "/metadata/" + key);
    }
  }

  try {
    return FittedNetwork(std::move(variables), std::move(dag), std::move(tables),
                         std::move(metadata));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CycleDetected) throw;
    malformed("/", e.what());
  }
}

FittedNetwork load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return deserialize(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what(), e.index());
  }
}

void save_model(const FittedNetwork& net, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << serialize(net);
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

}  // namespace beliefnet
