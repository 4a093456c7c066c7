#ifndef SADDLECALC_DOCUMENT_HPP
#define SADDLECALC_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "saddlecalc/phfunc.hpp"

namespace saddlecalc {

// A representation file: format_version 1, UTF-8 JSON, vectors as
// arrays of numbers, saddle grids as arrays of rows. The payload kind
// is tagged by the "kind" string.
struct Document {
  enum class Kind { kDc, kSaddle, kFamilies };

  int format_version = 1;
  int dim = 0;
  Kind kind = Kind::kDc;
  std::variant<std::monostate, DCPair, SaddleFamily, ApproximationFamilies> payload;
  std::string name;         // optional metadata, empty = absent
  std::string description;  // optional metadata, empty = absent

  const DCPair& dc() const { return std::get<DCPair>(payload); }
  const SaddleFamily& saddle() const { return std::get<SaddleFamily>(payload); }
  const ApproximationFamilies& families() const {
    return std::get<ApproximationFamilies>(payload);
  }

  friend bool operator==(const Document&, const Document&) = default;
};

// Parse failure. Syntax errors carry a line/column; semantic errors
// (wrong dimension, ragged grid, non-finite number, unsupported
// version) carry the JSON path of the offending element.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  ParseError(const std::string& message, const std::string& path);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  int line_ = -1;
  int column_ = -1;
  std::string path_;
};

Document make_dc_document(DCPair payload, std::string name = "",
                          std::string description = "");
Document make_saddle_document(SaddleFamily payload, std::string name = "",
                              std::string description = "");
Document make_families_document(ApproximationFamilies payload,
                                std::string name = "",
                                std::string description = "");

// parse(serialize(d)) is structurally equal to d: numbers are emitted
// with 17 significant digits, which round-trips doubles exactly.
Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);

const char* kind_name(Document::Kind kind);

}  // namespace saddlecalc

#endif  // SADDLECALC_DOCUMENT_HPP
