#include "freeidem/io.hpp"

#include <fstream>
#include <istream>

#include "freeidem/error.hpp"

namespace freeidem {

  namespace {
    std::vector<std::string> element_list(nlohmann::json const& doc) {
      if (!doc.contains("elements") || !doc["elements"].is_array()) {
        fail(ErrorCode::MalformedInput, "missing \"elements\" array");
      }
      std::vector<std::string> out;
      for (auto const& x : doc["elements"]) {
        if (!x.is_string()) {
          fail(ErrorCode::MalformedInput, "element names must be strings");
        }
        out.push_back(x.get<std::string>());
      }
      return out;
    }

    std::size_t table_entry(nlohmann::json const& x, std::vector<std::string> const& names) {
      if (x.is_number_unsigned()) {
        auto const k = x.get<std::size_t>();
        if (k >= names.size()) {
          fail(ErrorCode::MalformedInput, "table entry out of range: " + std::to_string(k));
        }
        return k;
      }
      if (x.is_string()) {
        auto const& s = x.get_ref<std::string const&>();
        for (std::size_t k = 0; k < names.size(); ++k) {
          if (names[k] == s) {
            return k;
          }
        }
        fail(ErrorCode::UnknownElement, "unknown element in table: " + s);
      }
      fail(ErrorCode::MalformedInput, "table entries must be indices or names");
    }
  }  // namespace

  BiorderedSet biorder_from_json(nlohmann::json const& doc) {
    if (!doc.is_object()) {
      fail(ErrorCode::MalformedInput, "expected a JSON object");
    }
    auto const names = element_list(doc);
    if (doc.contains("table")) {
      CayleyTable t{names, {}};
      auto const& rows = doc["table"];
      if (!rows.is_array() || rows.size() != names.size()) {
        fail(ErrorCode::MalformedInput, "\"table\" must have one row per element");
      }
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != names.size()) {
          fail(ErrorCode::MalformedInput, "\"table\" must be square");
        }
        auto& out = t.table.emplace_back();
        for (auto const& x : row) {
          out.push_back(table_entry(x, names));
        }
      }
      return BiorderedSet::from_cayley_table(t);
    }
    if (!doc.contains("products") || !doc["products"].is_array()) {
      fail(ErrorCode::MalformedInput, "expected \"products\" or \"table\"");
    }
    RawBiorder raw{names, {}};
    for (auto const& p : doc["products"]) {
      if (!p.is_array() || p.size() != 3 || !p[0].is_string() || !p[1].is_string()
          || !p[2].is_string()) {
        fail(ErrorCode::MalformedInput, "products must be [e, f, g] name triples");
      }
      raw.products.push_back(
          {p[0].get<std::string>(), p[1].get<std::string>(), p[2].get<std::string>()});
    }
    return BiorderedSet::validate_and_build(raw);
  }

  BiorderedSet load_biorder(std::istream& in) {
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
    }
    return biorder_from_json(doc);
  }

  BiorderedSet load_biorder_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      fail(ErrorCode::MalformedInput, "cannot open " + path);
    }
    return load_biorder(in);
  }

  nlohmann::json to_json(RawBiorder const& raw) {
    nlohmann::json products = nlohmann::json::array();
    for (auto const& p : raw.products) {
      products.push_back({p[0], p[1], p[2]});
    }
    return {{"elements", raw.elements}, {"products", products}};
  }

  nlohmann::json to_json(CayleyTable const& table) {
    return {{"elements", table.elements}, {"table", table.table}};
  }

}  // namespace freeidem
