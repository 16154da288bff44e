#include "riordan/format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace riordan {

namespace {

using nlohmann::json;

std::string join(const std::vector<Rat>& row, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += sep;
    out += row[i].to_string();
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "bfile") return OutputFormat::bfile;
  throw std::invalid_argument("unknown format \"" + name + "\" (plain|csv|json|bfile)");
}

std::string format_triangle(const Triangle& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain: {
      std::vector<std::size_t> width;
      for (const auto& row : t.rows)
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (width.size() <= k) width.resize(k + 1, 0);
          width[k] = std::max(width[k], row[k].to_string().size());
        }
      std::string out;
      for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          const std::string cell = row[k].to_string();
          if (k) out += "  ";
          out += std::string(width[k] - cell.size(), ' ');
          out += cell;
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::csv: {
      std::string out;
      for (const auto& row : t.rows) out += join(row, ",") + "\n";
      return out;
    }
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        rows.push_back(std::move(r));
      }
      return json{{"rows", std::move(rows)}}.dump() + "\n";
    }
    case OutputFormat::bfile:
      throw std::invalid_argument("b-file output requires an integer sequence, not a triangle");
  }
  throw std::logic_error("format_triangle: unreachable");
}

std::string format_sequence(const std::vector<Rat>& terms, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain:
    case OutputFormat::csv:
      return join(terms, ",") + "\n";
    case OutputFormat::json: {
      json list = json::array();
      for (const auto& v : terms) list.push_back(v.to_string());
      return json{{"terms", std::move(list)}}.dump() + "\n";
    }
    case OutputFormat::bfile: {
      std::string out;
      for (std::size_t n = 0; n < terms.size(); ++n) {
        if (!terms[n].is_integer())
          throw std::invalid_argument("b-file output requires integer terms; a(" +
                                      std::to_string(n) + ") = " + terms[n].to_string());
        out += std::to_string(n) + " " + terms[n].to_string() + "\n";
      }
      return out;
    }
  }
  throw std::logic_error("format_sequence: unreachable");
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> values;
  for (const auto& part : split(text, ',')) {
    const std::string item = strip(part);
    if (item.empty()) throw std::invalid_argument("empty entry in list \"" + text + "\"");
    values.push_back(Rat::from_string(item));
  }
  return values;
}

Triangle parse_triangle_csv(const std::string& text) {
  Triangle t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    t.rows.push_back(parse_rat_list(line));
  }
  return t;
}

Triangle parse_triangle_json(const std::string& text) {
  const json doc = json::parse(text);
  Triangle t;
  for (const auto& row : doc.at("rows")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(Rat::from_string(v.get<std::string>()));
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::vector<Rat> parse_sequence_csv(const std::string& text) {
  return parse_rat_list(strip(text));
}

std::vector<Rat> parse_sequence_json(const std::string& text) {
  const json doc = json::parse(text);
  std::vector<Rat> terms;
  for (const auto& v : doc.at("terms")) terms.push_back(Rat::from_string(v.get<std::string>()));
  return terms;
}

}  // namespace riordan
