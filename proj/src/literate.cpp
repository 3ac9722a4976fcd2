#include "josephus/literate.hpp"

#include <algorithm>
#include <sstream>

#include "josephus/error.hpp"

namespace josephus::literate {

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(start, nl - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = nl + 1;
  }
  return lines;
}

// Recognizes "<<Name>>=" (trailing whitespace allowed). Returns false for
// lines that are not headers; throws for lines that look like a broken one.
bool definition_header(const std::string& line, std::size_t lineno, std::string& name) {
  if (line.rfind("<<", 0) != 0) return false;
  const std::string body = trim(line);
  const auto close = body.find(">>");
  if (close == std::string::npos) {
    if (body.back() == '=') throw ParseError(lineno, "unterminated chunk header: " + body);
    return false;
  }
  if (body.compare(close, std::string::npos, ">>=") != 0) {
    if (body.back() == '=') throw ParseError(lineno, "malformed chunk header: " + body);
    return false;  // a reference at column 0 outside a chunk: prose
  }
  name = trim(std::string_view(body).substr(2, close - 2));
  if (name.empty()) throw ParseError(lineno, "empty chunk name");
  return true;
}

bool terminator(const std::string& line, std::string& prose_rest) {
  if (line == "@" || trim(line) == "@") {
    prose_rest.clear();
    return true;
  }
  if (line.rfind("@ ", 0) == 0) {
    prose_rest = line.substr(2);
    return true;
  }
  return false;
}

}  // namespace

std::vector<Reference> find_references(std::string_view line) {
  std::vector<Reference> out;
  std::size_t pos = 0;
  while ((pos = line.find("<<", pos)) != std::string_view::npos) {
    auto close = line.find(">>", pos + 2);
    if (close == std::string_view::npos) break;
    auto inner = line.substr(pos + 2, close - pos - 2);
    std::string name = trim(inner);
    if (name.empty() || inner.find("<<") != std::string_view::npos) {
      pos += 2;
      continue;
    }
    out.push_back(Reference{std::move(name), pos, close + 2});
    pos = close + 2;
  }
  return out;
}

std::vector<std::string> WebDocument::names_by_ordinal() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : chunks) names.push_back(name);
  std::sort(names.begin(), names.end(), [&](const auto& a, const auto& b) {
    return chunks.at(a).ordinal < chunks.at(b).ordinal;
  });
  return names;
}

WebDocument parse(std::string_view source) {
  WebDocument doc;
  const auto lines = split_lines(source);
  ChunkDefinition* open = nullptr;

  auto prose = [&](std::size_t lineno, std::string text) {
    if (doc.blocks.empty() || !std::holds_alternative<ProseBlock>(doc.blocks.back()))
      doc.blocks.emplace_back(ProseBlock{lineno, {}});
    std::get<ProseBlock>(doc.blocks.back()).lines.push_back(std::move(text));
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const std::string& line = lines[i];
    std::string name;
    if (definition_header(line, lineno, name)) {
      auto& blk = doc.blocks.emplace_back(ChunkDefinition{name, lineno, {}});
      open = &std::get<ChunkDefinition>(blk);
      auto [it, fresh] = doc.chunks.try_emplace(name);
      if (fresh) it->second.ordinal = doc.chunks.size();
      it->second.definition_lines.push_back(lineno);
      continue;
    }
    if (open) {
      std::string rest;
      if (terminator(line, rest)) {
        open = nullptr;
        if (!rest.empty()) prose(lineno, rest);
        continue;
      }
      open->lines.push_back(line);
      doc.chunks[open->name].lines.push_back(line);
      continue;
    }
    prose(lineno, line);
  }

  // Reference sites need every definition, so resolve after the scan.
  for (const auto& blk : doc.blocks) {
    const auto* def = std::get_if<ChunkDefinition>(&blk);
    if (!def) continue;
    for (std::size_t k = 0; k < def->lines.size(); ++k) {
      for (const auto& ref : find_references(def->lines[k])) {
        ReferenceSite site{def->name, def->header_line + 1 + k};
        auto it = doc.chunks.find(ref.name);
        if (it == doc.chunks.end()) doc.undefined[ref.name].push_back(site);
        else it->second.referenced_from.push_back(site);
      }
    }
  }
  return doc;
}

namespace {

class Tangler {
 public:
  explicit Tangler(const WebDocument& doc) : doc_(doc) {}

  void expand(const std::string& name, const std::string& prefix, std::vector<std::string>& out) {
    auto it = doc_.chunks.find(name);
    if (it == doc_.chunks.end()) throw TangleError("undefined chunk <<" + name + ">>");
    if (auto cyc = std::find(stack_.begin(), stack_.end(), name); cyc != stack_.end()) {
      std::string path;
      for (auto p = cyc; p != stack_.end(); ++p) path += *p + " -> ";
      throw TangleError("cycle in chunk references: " + path + name);
    }
    stack_.push_back(name);
    const Chunk& chunk = it->second;
    // Line numbers for error sites: walk the definitions in source order.
    std::vector<std::size_t> lineno = source_lines(name);
    for (std::size_t k = 0; k < chunk.lines.size(); ++k) {
      const std::string& line = chunk.lines[k];
      auto refs = find_references(line);
      if (refs.empty()) {
        out.push_back(prefix + line);
        continue;
      }
      splice(line, refs, prefix, name, lineno[k], out);
    }
    stack_.pop_back();
  }

 private:
  void splice(const std::string& line, const std::vector<Reference>& refs,
              const std::string& prefix, const std::string& from, std::size_t lineno,
              std::vector<std::string>& out) {
    // Text accumulated on the current output line.
    std::string pending = prefix;
    std::size_t cursor = 0;
    for (const auto& ref : refs) {
      pending += line.substr(cursor, ref.begin - cursor);
      if (!doc_.chunks.count(ref.name))
        throw TangleError("undefined chunk <<" + ref.name + ">> referenced from <<" + from +
                          ">> at line " + std::to_string(lineno));
      std::vector<std::string> body;
      const std::string indent = whitespace_like(pending);
      expand(ref.name, "", body);
      for (std::size_t j = 0; j < body.size(); ++j) {
        if (j + 1 < body.size()) {
          out.push_back((j == 0 ? pending : indent) + body[j]);
        } else {
          pending = (j == 0 ? pending : indent) + body[j];
        }
      }
      cursor = ref.end;
    }
    pending += line.substr(cursor);
    out.push_back(std::move(pending));
  }

  static std::string whitespace_like(const std::string& s) {
    std::string out;
    for (char ch : s) out += (ch == '\t' ? '\t' : ' ');
    return out;
  }

  std::vector<std::size_t> source_lines(const std::string& name) const {
    std::vector<std::size_t> out;
    for (const auto& blk : doc_.blocks) {
      const auto* def = std::get_if<ChunkDefinition>(&blk);
      if (!def || def->name != name) continue;
      for (std::size_t k = 0; k < def->lines.size(); ++k) out.push_back(def->header_line + 1 + k);
    }
    return out;
  }

  const WebDocument& doc_;
  std::vector<std::string> stack_;
};

}  // namespace

std::string tangle(const WebDocument& doc, const std::string& root) {
  const std::string name = trim(root);
  if (!doc.chunks.count(name)) throw TangleError("root chunk <<" + name + ">> is not defined");
  std::vector<std::string> lines;
  Tangler(doc).expand(name, "", lines);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  if (out.empty()) out = "\n";
  return out;
}

namespace {

std::string display_name(const WebDocument& doc, const std::string& name) {
  auto it = doc.chunks.find(name);
  if (it == doc.chunks.end()) return "⟨" + name + " ?⟩";
  return "⟨" + name + " " + std::to_string(it->second.ordinal) + "⟩";
}

std::string join_lines(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

std::string describe_sites(const WebDocument& doc, const std::vector<ReferenceSite>& sites) {
  std::string out;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i) out += ", ";
    out += display_name(doc, sites[i].from_chunk) + " (line " + std::to_string(sites[i].line) + ")";
  }
  return out;
}

}  // namespace

std::string weave(const WebDocument& doc) {
  std::ostringstream out;
  std::map<std::string, int> seen;
  for (const auto& blk : doc.blocks) {
    if (const auto* p = std::get_if<ProseBlock>(&blk)) {
      for (const auto& l : p->lines) out << l << '\n';
      continue;
    }
    const auto& def = std::get<ChunkDefinition>(blk);
    const auto& chunk = doc.chunks.at(def.name);
    const bool continuation = seen[def.name]++ > 0;
    out << "**Note " << chunk.ordinal << ".** " << display_name(doc, def.name)
        << (continuation ? " +≡" : " ≡") << "\n\n```\n";
    for (const auto& line : def.lines) {
      std::string rendered;
      std::size_t cursor = 0;
      for (const auto& ref : find_references(line)) {
        rendered += line.substr(cursor, ref.begin - cursor) + display_name(doc, ref.name);
        cursor = ref.end;
      }
      out << rendered << line.substr(cursor) << '\n';
    }
    out << "```\n\n";
  }

  out << "## Chunk index\n";
  if (!doc.chunks.empty() || !doc.undefined.empty()) out << '\n';
  for (const auto& name : doc.names_by_ordinal()) {
    const auto& chunk = doc.chunks.at(name);
    out << "- " << display_name(doc, name) << ": defined at line "
        << join_lines(chunk.definition_lines) << "; ";
    if (chunk.referenced_from.empty()) out << "not referenced";
    else out << "referenced by " << describe_sites(doc, chunk.referenced_from);
    out << '\n';
  }
  for (const auto& [name, sites] : doc.undefined)
    out << "- ⟨" << name << "⟩: UNDEFINED; referenced by " << describe_sites(doc, sites) << '\n';
  return out.str();
}

std::vector<ChunkRow> list_chunks(const WebDocument& doc) {
  std::vector<ChunkRow> rows;
  for (const auto& name : doc.names_by_ordinal()) {
    const auto& c = doc.chunks.at(name);
    rows.push_back(ChunkRow{c.ordinal, name, c.definition_lines, c.referenced_from});
  }
  return rows;
}

}  // namespace josephus::literate
