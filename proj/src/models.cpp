#include "specmine/models.hpp"

#include <initializer_list>
#include <tuple>

#include "specmine/error.hpp"

namespace specmine {

namespace {

using Row = std::tuple<const char*, const char*, const char*>;

// States are created in order of first mention; the first one is initial.
Fsa make(std::initializer_list<Row> rows, std::initializer_list<const char*> accepting) {
  Fsa m;
  auto state = [&m](const char* n) {
    if (auto s = m.find_state(n)) return *s;
    return m.add_state(n);
  };
  for (const auto& [from, label, to] : rows) {
    const StateId f = state(from);
    m.add_transition(f, label, state(to));
  }
  for (const char* a : accepting) m.set_accepting(state(a));
  m.validate();
  return m;
}

Fsa retailer() {
  return make(
      {
          {"start", "regLogin", "reg"},
          {"reg", "cat", "reg"},
          {"reg", "order", "reg_ordered"},
          {"reg_ordered", "inv", "reg_invoiced"},
          {"reg_invoiced", "pay", "reg_paid"},
          {"reg_paid", "ship", "done"},
          {"start", "premLogin", "prem"},
          {"prem", "cat", "prem"},
          {"prem", "order", "prem_ordered"},
          {"prem_ordered", "ship", "prem_shipped"},
          {"prem_shipped", "inv", "prem_invoiced"},
          {"prem_invoiced", "pay", "done"},
      },
      {"done"});
}

// Four failed attempts, then the security question.
Fsa login() {
  return make(
      {
          {"start", "login", "try1"},
          {"try1", "fail", "try2"},
          {"try2", "fail", "try3"},
          {"try3", "fail", "try4"},
          {"try4", "fail", "locked"},
          {"try1", "success", "session"},
          {"try2", "success", "session"},
          {"try3", "success", "session"},
          {"try4", "success", "session"},
          {"locked", "answerSecurity", "session"},
          {"session", "logout", "end"},
      },
      {"end"});
}

// Iteration ends with the hasMoreTokens call that returns false.
Fsa string_tokenizer() {
  return make(
      {
          {"new", "init", "ready"},
          {"ready", "hasMoreTokens", "checked"},
          {"checked", "nextToken", "ready"},
      },
      {"checked"});
}

Fsa zip_output_stream() {
  return make(
      {
          {"start", "ZipOutputStream", "open"},
          {"open", "putNextEntry", "entry"},
          {"entry", "write", "written"},
          {"written", "closeEntry", "open"},
          {"open", "close", "closed"},
      },
      {"closed"});
}

Fsa amazon_ec2() {
  return make(
      {
          {"start", "login", "session"},
          {"session", "runInstance", "running"},
          {"running", "rebootInstance", "running"},
          {"running", "stopInstance", "stopped"},
          {"stopped", "startInstance", "running"},
          {"running", "terminateInstance", "terminated"},
          {"stopped", "terminateInstance", "terminated"},
          {"terminated", "logout", "end"},
      },
      {"end"});
}

// FTP-style client session; transfers may repeat before leaving.
Fsa cvs() {
  return make(
      {
          {"start", "initialise", "init"},
          {"init", "connect", "connected"},
          {"connected", "login", "auth"},
          {"auth", "changedir", "in_dir"},
          {"auth", "makedir", "made"},
          {"made", "changedir", "in_dir"},
          {"in_dir", "listfiles", "listed"},
          {"in_dir", "listnames", "listed"},
          {"listed", "setfiletype", "typed"},
          {"typed", "storefile", "transferred"},
          {"typed", "retrievefile", "transferred"},
          {"typed", "appendfile", "transferred"},
          {"transferred", "setfiletype", "typed"},
          {"transferred", "rename", "edited"},
          {"transferred", "delete", "edited"},
          {"edited", "removedir", "cleaned"},
          {"edited", "logout", "out"},
          {"cleaned", "logout", "out"},
          {"transferred", "logout", "out"},
          {"out", "disconnect", "end"},
      },
      {"end"});
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::published ? "published" : "reconstructed";
}

const std::vector<GroundTruthModel>& builtin_models() {
  static const std::vector<GroundTruthModel> models = {
      {"retailer", retailer(), Provenance::published},
      {"login", login(), Provenance::published},
      {"StringTokenizer", string_tokenizer(), Provenance::reconstructed},
      {"ZipOutputStream", zip_output_stream(), Provenance::reconstructed},
      {"Amazon-ec2", amazon_ec2(), Provenance::reconstructed},
      {"CVS", cvs(), Provenance::reconstructed},
  };
  return models;
}

const GroundTruthModel& builtin_model(std::string_view name) {
  for (const auto& m : builtin_models())
    if (m.name == name) return m;
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

Fsa flower_model(const std::set<std::string>& alphabet) {
  Fsa f;
  const StateId s = f.add_state();
  f.set_accepting(s);
  for (const auto& a : alphabet) f.add_transition(s, a, s);
  return f;
}

}  // namespace specmine
