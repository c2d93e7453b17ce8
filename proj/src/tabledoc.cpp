#include "tabgen/tabledoc.hpp"

#include <algorithm>
#include <set>

#include "tabgen/errors.hpp"

namespace tabgen {

const char* component_type_name(ComponentType t) {
  switch (t) {
    case ComponentType::Question: return "Question";
    case ComponentType::DocumentTitle: return "DocumentTitle";
    case ComponentType::TableCaption: return "TableCaption";
    case ComponentType::TableHeader: return "TableHeader";
    case ComponentType::TableCell: return "TableCell";
    case ComponentType::EntityHint: return "EntityHint";
    case ComponentType::Passage: return "Passage";
  }
  return "?";
}

ComponentType component_type_from_name(const std::string& name) {
  for (int i = 1; i <= 7; ++i) {
    auto t = static_cast<ComponentType>(i);
    if (name == component_type_name(t)) return t;
  }
  throw ParseError("unknown component type: " + name);
}

bool is_table_type(ComponentType t) {
  return t == ComponentType::TableHeader || t == ComponentType::TableCell;
}

Document build_document(const std::vector<std::vector<std::string>>& cells,
                        const std::vector<std::string>& headers, const Metadata& metadata,
                        std::string id) {
  Document doc;
  doc.id = std::move(id);
  doc.num_cols = static_cast<int>(headers.size());
  doc.num_data_rows = static_cast<int>(cells.size());
  for (const auto& [type, text] : metadata) {
    if (is_table_type(type)) {
      throw InvalidDocument("metadata component has table type " +
                            std::string(component_type_name(type)));
    }
    doc.components.push_back({text, type, 0, 0});
  }
  for (int c = 0; c < doc.num_cols; ++c) {
    doc.components.push_back({headers[c], ComponentType::TableHeader, c + 1, 0});
  }
  for (int r = 0; r < doc.num_data_rows; ++r) {
    if (static_cast<int>(cells[r].size()) != doc.num_cols) {
      throw RaggedGrid("grid row " + std::to_string(r) + " has " +
                       std::to_string(cells[r].size()) + " cells, expected " +
                       std::to_string(doc.num_cols));
    }
    for (int c = 0; c < doc.num_cols; ++c) {
      doc.components.push_back({cells[r][c], ComponentType::TableCell, c + 1, r + 1});
    }
  }
  return doc;
}

void validate_document(const Document& doc) {
  std::set<std::pair<int, int>> seen_cells;
  std::set<int> seen_headers;
  for (const Component& c : doc.components) {
    switch (c.ctype) {
      case ComponentType::TableHeader:
        if (c.row != 0 || c.col < 1 || c.col > doc.num_cols) {
          throw InvalidDocument("header at invalid coordinates (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) + ")");
        }
        if (!seen_headers.insert(c.col).second) {
          throw InvalidDocument("duplicate header for column " + std::to_string(c.col));
        }
        break;
      case ComponentType::TableCell:
        if (c.row < 1 || c.row > doc.num_data_rows || c.col < 1 || c.col > doc.num_cols) {
          throw InvalidDocument("cell at invalid coordinates (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) + ")");
        }
        if (!seen_cells.insert({c.row, c.col}).second) {
          throw InvalidDocument("duplicate cell at (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) + ")");
        }
        break;
      default:
        if (c.row != 0 || c.col != 0) {
          throw InvalidDocument(std::string(component_type_name(c.ctype)) +
                                " component must sit at (0,0)");
        }
    }
  }
}

std::vector<Component> linearize(const Document& doc) {
  validate_document(doc);
  return doc.components;
}

Document clip_coordinates(Document doc, int max_rows, int max_cols) {
  for (Component& c : doc.components) {
    c.row = std::min(c.row, max_rows);
    c.col = std::min(c.col, max_cols);
  }
  return doc;
}

Document document_from_json(const Json& j) {
  std::vector<std::string> headers;
  for (const auto& h : j.at("headers")) headers.push_back(h.get<std::string>());
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<std::string> cells;
    for (const auto& cell : row) cells.push_back(cell.get<std::string>());
    rows.push_back(std::move(cells));
  }
  Metadata metadata;
  if (j.contains("metadata")) {
    for (const auto& m : j.at("metadata")) {
      metadata.emplace_back(component_type_from_name(m.at("type").get<std::string>()),
                            m.at("text").get<std::string>());
    }
  }
  return build_document(rows, headers, metadata, j.at("id").get<std::string>());
}

Json document_to_json(const Document& doc) {
  Json j;
  j["id"] = doc.id;
  Json headers = Json::array();
  Json rows = Json::array();
  Json metadata = Json::array();
  std::vector<std::vector<std::string>> grid(
      doc.num_data_rows, std::vector<std::string>(doc.num_cols));
  std::vector<std::string> hdr(doc.num_cols);
  for (const Component& c : doc.components) {
    if (c.ctype == ComponentType::TableHeader) {
      hdr[c.col - 1] = c.utterance;
    } else if (c.ctype == ComponentType::TableCell) {
      grid[c.row - 1][c.col - 1] = c.utterance;
    } else {
      metadata.push_back({{"type", component_type_name(c.ctype)}, {"text", c.utterance}});
    }
  }
  for (const auto& h : hdr) headers.push_back(h);
  for (const auto& row : grid) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell);
    rows.push_back(r);
  }
  j["headers"] = headers;
  j["rows"] = rows;
  j["metadata"] = metadata;
  return j;
}

std::vector<Document> read_documents(const std::string& path) {
  std::vector<Document> docs;
  read_jsonl(path, [&](size_t lineno, const Json& j) {
    try {
      docs.push_back(document_from_json(j));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("bad document in " + path + " at line " + std::to_string(lineno) + ": " +
                       e.what());
    }
  });
  return docs;
}

void write_documents(const std::string& path, const std::vector<Document>& docs) {
  std::vector<Json> rows;
  rows.reserve(docs.size());
  for (const Document& d : docs) rows.push_back(document_to_json(d));
  write_jsonl(path, rows);
}

TableView table_view(const Document& doc) {
  TableView view;
  view.headers.resize(doc.num_cols);
  view.cells.assign(doc.num_data_rows, std::vector<std::string>(doc.num_cols));
  for (const Component& c : doc.components) {
    if (c.ctype == ComponentType::TableHeader) {
      view.headers[c.col - 1] = c.utterance;
    } else if (c.ctype == ComponentType::TableCell) {
      view.cells[c.row - 1][c.col - 1] = c.utterance;
    }
  }
  return view;
}

}  // namespace tabgen
