#ifndef HYPERSIMP_IO_HPP_
#define HYPERSIMP_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

enum class Format { Json, Edgelist };

/// Syntax or structure error in an input document. `line` is 1-based and 0
/// when not applicable; `field` names the offending JSON key or token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field = {})
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

Format parse_format(std::string_view name);

/// Parses and validates. Edgelist lines look like `e: u v w`; a line with an
/// empty id (`: u v`) declares vertices without a hyperedge. Labels are only
/// carried by the JSON format.
Hypergraph parse_hypergraph(std::string_view text, Format format);
/// Deterministic output with sorted ids and a trailing newline.
std::string serialize_hypergraph(const Hypergraph& h, Format format);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace hypersimp

#endif  // HYPERSIMP_IO_HPP_
