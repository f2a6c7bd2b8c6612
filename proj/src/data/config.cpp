#include "beliefnet/data/config.hpp"

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/csv.hpp"

namespace beliefnet::config {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where,
                       const std::string& what) {
  throw Error(ErrorKind::Config, source + ": " + where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& source,
                    const std::string& where) {
  if (!obj.is_object()) fail(source, where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(source, where, std::string("missing key '") + key + "'");
  return *it;
}

std::string string_at(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_string()) fail(source, where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_at(const json& j, const std::string& source,
                                    const std::string& where) {
  if (!j.is_array()) fail(source, where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(string_at(j[i], source, where + "/" + std::to_string(i)));
  }
  return out;
}

// Tokens may be written as JSON strings or numbers ("1" and 1 are the same).
std::string token_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

json parse(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::Config, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(column) + ": " + e.what());
  }
}

json load(const std::filesystem::path& path) {
  return parse(csv::read_file(path), path.string());
}

RecodeSpec recode_spec(const json& doc, const std::string& source) {
  RecodeSpec spec;
  if (auto it = doc.find("min_count"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() < 0) {
      fail(source, "/min_count", "expected a non-negative integer");
    }
    spec.min_count = it->get<int>();
  }
  const json& vars = require(doc, "variables", source, "/");
  if (!vars.is_array()) fail(source, "/variables", "expected an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string where = "/variables/" + std::to_string(i);
    const json& v = vars[i];
    VariableRecode rv;
    rv.name = string_at(require(v, "name", source, where), source, where + "/name");
    rv.column = v.contains("column") ? string_at(v["column"], source, where + "/column")
                                     : rv.name;
    rv.levels = strings_at(require(v, "levels", source, where), source, where + "/levels");
    rv.ordinal = v.value("ordinal", false);
    rv.collapse_rare = v.value("collapse_rare", true);
    if (v.contains("missing")) {
      const json& m = v["missing"];
      if (!m.is_array()) fail(source, where + "/missing", "expected an array");
      for (const auto& t : m) rv.missing_tokens.push_back(token_text(t));
    }
    if (v.contains("map")) {
      const json& m = v["map"];
      if (!m.is_object()) fail(source, where + "/map", "expected an object");
      for (const auto& [token, label] : m.items()) {
        if (label.is_null()) {
          rv.mapping[token] = std::nullopt;
        } else {
          std::string l = string_at(label, source, where + "/map/" + token);
          if (std::find(rv.levels.begin(), rv.levels.end(), l) == rv.levels.end()) {
            fail(source, where + "/map/" + token, "label '" + l + "' is not a level");
          }
          rv.mapping[token] = std::move(l);
        }
      }
    }
    const std::string policy = v.value("unmapped", std::string("strict"));
    if (policy == "strict") {
      rv.unmapped = UnmappedPolicy::Strict;
    } else if (policy == "missing") {
      rv.unmapped = UnmappedPolicy::Missing;
    } else {
      fail(source, where + "/unmapped", "expected \"strict\" or \"missing\"");
    }
    spec.variables.push_back(std::move(rv));
  }
  return spec;
}

std::vector<ThemeSpec> theme_specs(const json& doc, const std::string& source) {
  std::vector<ThemeSpec> out;
  const json& themes = require(doc, "themes", source, "/");
  if (!themes.is_array()) fail(source, "/themes", "expected an array");
  for (std::size_t i = 0; i < themes.size(); ++i) {
    const std::string where = "/themes/" + std::to_string(i);
    ThemeSpec t;
    t.name = string_at(require(themes[i], "name", source, where), source, where + "/name");
    t.members = strings_at(require(themes[i], "members", source, where), source,
                           where + "/members");
    t.population = themes[i].value("population", std::string());
    if (!t.population.empty() && t.population != "risk" &&
        t.population != "opportunity") {
      fail(source, where + "/population", "expected \"risk\" or \"opportunity\"");
    }
    out.push_back(std::move(t));
  }
  return out;
}

FramingLevels framing_levels(const json& doc, const std::string& source) {
  FramingLevels f;
  auto it = doc.find("framing");
  if (it == doc.end()) return f;
  if (!it->is_object()) fail(source, "/framing", "expected an object");
  f.variable = it->value("variable", f.variable);
  f.risk = it->value("risk", f.risk);
  f.opportunity = it->value("opportunity", f.opportunity);
  f.both = it->value("both", f.both);
  return f;
}

TierSpec tier_spec(const json& doc, const std::string& source) {
  TierSpec spec;
  const json& tiers = require(doc, "tiers", source, "/");
  if (!tiers.is_array()) fail(source, "/tiers", "expected an array");
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    const std::string where = "/tiers/" + std::to_string(t);
    const json& tier = tiers[t];
    if (tier.is_array()) {
      spec.tiers.push_back(strings_at(tier, source, where));
      spec.within_tier_edges.push_back(true);
    } else {
      spec.tiers.push_back(
          strings_at(require(tier, "variables", source, where), source, where + "/variables"));
      spec.within_tier_edges.push_back(tier.value("within_tier_edges", true));
    }
    if (spec.tiers.back().empty()) fail(source, where, "tier is empty");
  }
  return spec;
}

RecodeSpec load_recode_spec(const std::filesystem::path& path) {
  return recode_spec(load(path), path.string());
}

std::vector<ThemeSpec> load_theme_specs(const std::filesystem::path& path) {
  return theme_specs(load(path), path.string());
}

TierSpec load_tier_spec(const std::filesystem::path& path) {
  return tier_spec(load(path), path.string());
}

}  // namespace beliefnet::config
