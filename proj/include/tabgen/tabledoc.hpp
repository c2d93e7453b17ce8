#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tabgen/jsonl.hpp"

namespace tabgen {

// Typed text unit of a table-and-text document. Non-table types sit at
// (0,0); headers at row 0, cols 1..C; data cells at rows 1..R, cols 1..C.
enum class ComponentType : int {
  Question = 1,
  DocumentTitle = 2,
  TableCaption = 3,
  TableHeader = 4,
  TableCell = 5,
  EntityHint = 6,
  Passage = 7,
};

const char* component_type_name(ComponentType t);
ComponentType component_type_from_name(const std::string& name);
bool is_table_type(ComponentType t);

struct Component {
  std::string utterance;
  ComponentType ctype = ComponentType::Question;
  int col = 0;
  int row = 0;

  bool operator==(const Component&) const = default;
};

struct Document {
  std::string id;
  std::vector<Component> components;
  int num_data_rows = 0;
  int num_cols = 0;

  bool operator==(const Document&) const = default;
};

using Metadata = std::vector<std::pair<ComponentType, std::string>>;

// Components ordered: metadata (given order), headers left-to-right, cells
// row by row left-to-right. Throws RaggedGrid when a grid row length
// differs from the header count, InvalidDocument when a metadata type is a
// table type.
Document build_document(const std::vector<std::vector<std::string>>& cells,
                        const std::vector<std::string>& headers, const Metadata& metadata,
                        std::string id = "");

// Throws InvalidDocument when invariants are violated: coordinates
// inconsistent with component types, duplicate cells/headers, coordinates
// outside the declared table shape.
void validate_document(const Document& doc);

// Document-order component stream; validates first.
std::vector<Component> linearize(const Document& doc);

// Clamps row ids to max_rows and col ids to max_cols. Idempotent.
Document clip_coordinates(Document doc, int max_rows, int max_cols);

// JSONL interchange: {id, headers, rows, metadata:[{type,text}]}.
// Serialization is canonical (fixed key order, compact) so parse→serialize
// is the identity on files this writer produced.
Document document_from_json(const Json& j);
Json document_to_json(const Document& doc);

std::vector<Document> read_documents(const std::string& path);
void write_documents(const std::string& path, const std::vector<Document>& docs);

// Grid view over a document's table, used by sqlexec and pretrain_data.
// headers[c] / cells[r][c] are 0-based; absent cells are empty strings.
struct TableView {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> cells;
  int num_rows() const { return static_cast<int>(cells.size()); }
  int num_cols() const { return static_cast<int>(headers.size()); }
};

TableView table_view(const Document& doc);

}  // namespace tabgen
