#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace josephus::literate {

// Concrete syntax (noweb style):
//
//   <<Name>>=        starts a definition of chunk Name (column 0)
//   <<Other>>        inside a chunk body, a reference to chunk Other
//   @                ends the chunk body; "@ text" also starts prose with "text"
//
// Every line outside a chunk body is prose. Defining a name again appends to
// the chunk. Names are compared after trimming surrounding whitespace.

struct ReferenceSite {
  std::string from_chunk;  // chunk whose body holds the reference
  std::size_t line = 0;    // 1-based source line
};

struct ProseBlock {
  std::size_t first_line = 0;
  std::vector<std::string> lines;
};

struct ChunkDefinition {
  std::string name;
  std::size_t header_line = 0;
  std::vector<std::string> lines;
};

using Block = std::variant<ProseBlock, ChunkDefinition>;

struct Chunk {
  std::size_t ordinal = 0;  // first-definition order, from 1
  std::vector<std::string> lines;
  std::vector<std::size_t> definition_lines;
  std::vector<ReferenceSite> referenced_from;
};

struct WebDocument {
  std::vector<Block> blocks;
  std::map<std::string, Chunk> chunks;
  // References to names with no definition, keyed by the missing name.
  std::map<std::string, std::vector<ReferenceSite>> undefined;

  // Chunk names sorted by ordinal.
  std::vector<std::string> names_by_ordinal() const;
};

// Throws ParseError for a malformed definition header.
WebDocument parse(std::string_view source);

// Splices references recursively starting from `root`. A reference with text
// before it prefixes that text (as whitespace after the first line) to every
// spliced line; text after it is appended to the last one. Output ends with
// exactly one newline. Throws TangleError for undefined chunks and cycles.
std::string tangle(const WebDocument& doc, const std::string& root);

// Markdown: prose verbatim, each definition as a numbered note with a fenced
// code block, then a chunk index with definition and use sites.
std::string weave(const WebDocument& doc);

struct ChunkRow {
  std::size_t ordinal;
  std::string name;
  std::vector<std::size_t> definition_lines;
  std::vector<ReferenceSite> references;
};

std::vector<ChunkRow> list_chunks(const WebDocument& doc);

// A reference found in a body line: [begin, end) covers "<<Name>>".
struct Reference {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<Reference> find_references(std::string_view line);

}  // namespace josephus::literate
