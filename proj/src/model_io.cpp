#include "specmine/model_io.hpp"

#include <json.hpp>
#include <sstream>

#include "specmine/error.hpp"

namespace specmine {

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const Fsa& fsa) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["states"] = ordered_json::array();
  for (StateId s = 0; s < fsa.num_states(); ++s) doc["states"].push_back(fsa.name(s));
  doc["alphabet"] = ordered_json::array();
  for (const auto& sym : fsa.alphabet()) doc["alphabet"].push_back(sym);
  doc["initial"] = fsa.empty() ? std::string{} : fsa.name(fsa.initial());
  doc["accepting"] = ordered_json::array();
  for (StateId s : fsa.accepting_states()) doc["accepting"].push_back(fsa.name(s));
  doc["transitions"] = ordered_json::array();
  for (const auto& t : fsa.transitions()) {
    ordered_json row;
    row["from"] = fsa.name(t.from);
    row["label"] = is_empty_label(t.label) ? std::string(kJsonEmptyLabel) : t.label;
    row["to"] = fsa.name(t.to);
    doc["transitions"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

Fsa from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid model JSON: ") + e.what());
  }
  try {
    Fsa fsa;
    for (const auto& s : doc.at("states")) fsa.add_state(s.get<std::string>());
    if (fsa.empty()) throw ParseError("model has no states");
    auto state = [&](const nlohmann::json& j) {
      const auto name = j.get<std::string>();
      auto id = fsa.find_state(name);
      if (!id) throw ParseError("unknown state '" + name + "'");
      return *id;
    };
    if (doc.contains("alphabet")) {
      for (const auto& sym : doc.at("alphabet")) {
        auto name = sym.get<std::string>();
        if (name.empty() || name == kJsonEmptyLabel) {
          throw ParseError("alphabet contains an empty or reserved symbol");
        }
        fsa.add_symbol(std::move(name));
      }
    }
    fsa.set_initial(state(doc.at("initial")));
    for (const auto& s : doc.at("accepting")) fsa.set_accepting(state(s));
    for (const auto& t : doc.at("transitions")) {
      auto label = t.at("label").get<std::string>();
      if (label == kJsonEmptyLabel) {
        label.clear();
      } else if (label.empty()) {
        throw ParseError("transition label must be non-empty");
      }
      fsa.add_transition(state(t.at("from")), std::move(label), state(t.at("to")));
    }
    return fsa;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model: ") + e.what());
  } catch (const InvariantError& e) {
    throw ParseError(e.what());
  }
}

std::string to_dot(const Fsa& fsa) {
  std::ostringstream os;
  os << "digraph fsa {\n  rankdir=LR;\n  node [shape=circle];\n";
  if (!fsa.empty()) {
    os << "  __start [shape=point];\n";
    for (StateId s = 0; s < fsa.num_states(); ++s) {
      os << "  " << dot_quote(fsa.name(s));
      if (fsa.is_accepting(s)) os << " [shape=doublecircle]";
      os << ";\n";
    }
    os << "  __start -> " << dot_quote(fsa.name(fsa.initial())) << ";\n";
    for (const auto& t : fsa.transitions()) {
      os << "  " << dot_quote(fsa.name(t.from)) << " -> " << dot_quote(fsa.name(t.to))
         << " [label=" << dot_quote(is_empty_label(t.label) ? kJsonEmptyLabel : t.label)
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace specmine
