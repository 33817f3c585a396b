#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "freeidem/biorder.hpp"

namespace freeidem {

  //! Parses either a biorder document ("products") or a Cayley document
  //! ("table"). Table entries may be indices into "elements" or names.
  BiorderedSet biorder_from_json(nlohmann::json const& doc);

  BiorderedSet load_biorder(std::istream& in);
  //! Throws `MalformedInput` if the file cannot be opened or parsed.
  BiorderedSet load_biorder_file(std::string const& path);

  nlohmann::json to_json(RawBiorder const& raw);
  nlohmann::json to_json(CayleyTable const& table);

}  // namespace freeidem
