#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "prelieder/cochain.hpp"
#include "prelieder/deformation.hpp"
#include "prelieder/extension.hpp"
#include "prelieder/prelie.hpp"

namespace prelieder {

using Json = nlohmann::ordered_json;

/// Malformed input. `where` is a JSON pointer into the document, or
/// "line L, column C" for syntax errors.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string where, const std::string& message)
      : std::invalid_argument(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct RepresentationDoc {
  int dim_g = 0;
  Representation rep;
  friend bool operator==(const RepresentationDoc&, const RepresentationDoc&) = default;
};

/// A map g -> V (dim_v x dim_g).
struct DerivationDoc {
  Matrix matrix;
  friend bool operator==(const DerivationDoc&, const DerivationDoc&) = default;
};

/// Cocycle data of an abelian extension, optionally with a concrete realization.
struct ExtensionDoc {
  DerPairRepresentation rep;
  ExtensionCocycle cocycle;
  std::optional<AbelianExtension> realization;
  friend bool operator==(const ExtensionDoc&, const ExtensionDoc&) = default;
};

using Document = std::variant<PreLieAlgebra, RepresentationDoc, DerivationDoc, DerPair, GradedCochain,
                              DeformationDatum, ExtensionDoc>;

std::string document_kind(const Document& doc);

/// Exact rational from "p/q", "n" or a JSON integer.
Scalar parse_rational(const Json& value, const std::string& where);
std::string format_rational(const Scalar& s);

Document parse_document(std::string_view text);
Document read_document(const Json& json);
Json to_json(const Document& doc);
/// Canonical text: fixed key order, reduced rationals, two-space indent.
std::string emit_document(const Document& doc);
/// Two-space indented JSON with arrays of scalars kept on one line.
std::string dump_compact(const Json& json);

Document load_document(const std::string& path);

}  // namespace prelieder
