#pragma once

#include <string>
#include <vector>

#include "riordan/array.hpp"

namespace riordan {

enum class OutputFormat { plain, csv, json, bfile };

OutputFormat parse_format(const std::string& name);

/// Triangle renderings. "plain" aligns columns for reading; "csv" emits one
/// row per line; "json" follows {"rows": [[...]]} with rationals as strings.
/// Triangles have no b-file form; requesting it is an input error.
std::string format_triangle(const Triangle& t, OutputFormat format);

/// Sequence renderings. "plain" and "csv" are a comma-separated line; "json"
/// follows {"terms": [...]}; "bfile" emits "n a(n)" lines and requires every
/// term to be an integer.
std::string format_sequence(const std::vector<Rat>& terms, OutputFormat format);

Triangle parse_triangle_csv(const std::string& text);
Triangle parse_triangle_json(const std::string& text);
std::vector<Rat> parse_sequence_csv(const std::string& text);
std::vector<Rat> parse_sequence_json(const std::string& text);

/// Comma-separated rational literals -> values ("1,2,6/5").
std::vector<Rat> parse_rat_list(const std::string& text);

}  // namespace riordan
