#include "freeidem/csp.hpp"

#include "freeidem/error.hpp"

namespace freeidem {

  using nlohmann::json;

  namespace {
    BackendKind kind_from(std::string const& s) {
      if (s == "free") {
        return BackendKind::Free;
      }
      if (s == "finite") {
        return BackendKind::Finite;
      }
      if (s == "unknown") {
        return BackendKind::Unknown;
      }
      fail(ErrorCode::MalformedInput, "unknown group kind " + s);
    }

    template <typename T>
    T field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        fail(ErrorCode::MalformedInput, std::string("missing field ") + key);
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        fail(ErrorCode::MalformedInput, std::string("bad field ") + key + ": " + e.what());
      }
    }
  }  // namespace

  json word_to_json(GroupWord const& w) {
    return json(w.letters());
  }

  GroupWord word_from_json(json const& j) {
    if (!j.is_array()) {
      fail(ErrorCode::MalformedInput, "group word must be an array of letters");
    }
    std::vector<GroupLetter> l;
    for (auto const& x : j) {
      if (!x.is_number_integer() || x.get<GroupLetter>() == 0) {
        fail(ErrorCode::MalformedInput, "group letters are nonzero integers");
      }
      l.push_back(x.get<GroupLetter>());
    }
    return GroupWord(std::move(l));
  }

  json to_json(CspInstance const& c) {
    json groups = json::array();
    for (auto const& g : c.groups) {
      json rel = json::array();
      for (auto const& r : g.relators) {
        rel.push_back(word_to_json(r));
      }
      groups.push_back({{"class", g.dclass},
                        {"kind", std::string(to_string(g.kind))},
                        {"maximal", g.maximal},
                        {"generators", g.generators},
                        {"tree", g.tree},
                        {"relators", rel},
                        {"rank", g.rank},
                        {"order", g.order}});
    }
    json constraints = json::array();
    for (auto const& r : c.constraints) {
      json ts = json::array();
      for (auto const& t : r.transitions) {
        ts.push_back({{"from", t.from},
                      {"to", t.to},
                      {"letter", t.letter},
                      {"first", word_to_json(t.first)},
                      {"second", word_to_json(t.second)}});
      }
      constraints.push_back({{"first_class", r.first},
                             {"second_class", r.second},
                             {"states", r.num_states},
                             {"initial", r.initial},
                             {"final", r.final},
                             {"transitions", ts}});
    }
    json a = json::array(), b = json::array();
    for (auto const& w : c.a) {
      a.push_back(word_to_json(w));
    }
    for (auto const& w : c.b) {
      b.push_back(word_to_json(w));
    }
    return {{"schema", "freeidem-csp"},
            {"version", CspInstance::kSchemaVersion},
            {"fingerprint", c.fingerprint},
            {"groups", groups},
            {"constraints", constraints},
            {"inputs", {{"a", a}, {"b", b}}},
            {"endpoints",
             {{"i1", c.i1}, {"j1", c.j1}, {"lambda_m", c.lambda_m}, {"mu_m", c.mu_m}}},
            {"letters", c.letters}};
  }

  CspInstance csp_from_json(json const& j) {
    if (field<std::string>(j, "schema") != "freeidem-csp") {
      fail(ErrorCode::MalformedInput, "not a freeidem CSP document");
    }
    if (field<int>(j, "version") != CspInstance::kSchemaVersion) {
      fail(ErrorCode::MalformedInput, "unsupported CSP schema version");
    }
    CspInstance c;
    c.fingerprint = field<std::vector<ClassId>>(j, "fingerprint");
    c.letters     = field<std::vector<std::string>>(j, "letters");
    for (auto const& g : field<json>(j, "groups")) {
      CspGroup x;
      x.dclass     = field<ClassId>(g, "class");
      x.kind       = kind_from(field<std::string>(g, "kind"));
      x.maximal    = field<bool>(g, "maximal");
      x.generators = field<std::vector<std::string>>(g, "generators");
      x.tree       = field<std::vector<std::size_t>>(g, "tree");
      for (auto const& r : field<json>(g, "relators")) {
        x.relators.push_back(word_from_json(r));
      }
      x.rank  = field<std::size_t>(g, "rank");
      x.order = field<std::size_t>(g, "order");
      c.groups.push_back(std::move(x));
    }
    for (auto const& r : field<json>(j, "constraints")) {
      RhoSubset x;
      x.first      = field<ClassId>(r, "first_class");
      x.second     = field<ClassId>(r, "second_class");
      x.num_states = field<std::size_t>(r, "states");
      x.initial    = field<std::size_t>(r, "initial");
      x.final      = field<std::size_t>(r, "final");
      for (auto const& t : field<json>(r, "transitions")) {
        ContactTransition y;
        y.from   = field<std::size_t>(t, "from");
        y.to     = field<std::size_t>(t, "to");
        y.letter = field<Element>(t, "letter");
        y.first  = word_from_json(field<json>(t, "first"));
        y.second = word_from_json(field<json>(t, "second"));
        if (y.from >= x.num_states || y.to >= x.num_states) {
          fail(ErrorCode::MalformedInput, "transition state out of range");
        }
        x.transitions.push_back(std::move(y));
      }
      c.constraints.push_back(std::move(x));
    }
    auto const inputs = field<json>(j, "inputs");
    for (auto const& w : field<json>(inputs, "a")) {
      c.a.push_back(word_from_json(w));
    }
    for (auto const& w : field<json>(inputs, "b")) {
      c.b.push_back(word_from_json(w));
    }
    auto const ends = field<json>(j, "endpoints");
    c.i1            = field<std::size_t>(ends, "i1");
    c.j1            = field<std::size_t>(ends, "j1");
    c.lambda_m      = field<std::size_t>(ends, "lambda_m");
    c.mu_m          = field<std::size_t>(ends, "mu_m");
    auto const m    = c.fingerprint.size();
    if (m == 0 || c.groups.size() != m || c.a.size() != m || c.b.size() != m
        || c.constraints.size() + 1 != m) {
      fail(ErrorCode::MalformedInput, "inconsistent instance sizes");
    }
    return c;
  }

}  // namespace freeidem
