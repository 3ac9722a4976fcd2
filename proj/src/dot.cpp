#include "josephus/dot.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace josephus {

std::vector<std::string> DotGraph::node_ids() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto note = [&](const std::string& id) {
    if (seen.insert(id).second) out.push_back(id);
  };
  for (const auto& c : clusters)
    for (const auto& n : c.nodes) note(n.id);
  for (const auto& n : nodes) note(n.id);
  for (const auto& e : edges) {
    note(e.from);
    note(e.to);
  }
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

void write_attrs(const DotAttrs& attrs, std::ostream& out) {
  if (attrs.empty()) return;
  out << " [";
  bool first = true;
  for (const auto& [k, v] : attrs) {
    if (!first) out << ", ";
    out << k << '=' << quote(v);
    first = false;
  }
  out << ']';
}

}  // namespace

void write_dot(const DotGraph& g, std::ostream& out) {
  out << "digraph " << quote(g.name) << " {\n";
  for (const auto& [k, v] : g.attrs) out << "  " << k << '=' << quote(v) << ";\n";
  for (const auto& c : g.clusters) {
    out << "  subgraph " << quote(c.name) << " {\n";
    for (const auto& [k, v] : c.attrs) out << "    " << k << '=' << quote(v) << ";\n";
    for (const auto& n : c.nodes) {
      out << "    " << quote(n.id);
      write_attrs(n.attrs, out);
      out << ";\n";
    }
    out << "  }\n";
  }
  for (const auto& n : g.nodes) {
    out << "  " << quote(n.id);
    write_attrs(n.attrs, out);
    out << ";\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << quote(e.from) << " -> " << quote(e.to);
    write_attrs(e.attrs, out);
    out << ";\n";
  }
  out << "}\n";
}

std::string to_dot(const DotGraph& g) {
  std::ostringstream os;
  write_dot(g, os);
  return os.str();
}

namespace detail {

void check_diagram_cap(std::size_t states, const DiagramOptions& opts) {
  if (states > opts.cap)
    throw ResourceGuard("diagram would have " + std::to_string(states) +
                        " nodes, above the cap of " + std::to_string(opts.cap) +
                        "; restrict to reachable states or a smaller universe");
}

}  // namespace detail

namespace {

enum class Tok { id, lbrace, rbrace, lbracket, rbracket, equals, semi, comma, arrow, undirected, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    if (pos_ >= src_.size()) return {Tok::end, "", line_};
    const std::size_t line = line_;
    char ch = src_[pos_];
    switch (ch) {
      case '{': ++pos_; return {Tok::lbrace, "{", line};
      case '}': ++pos_; return {Tok::rbrace, "}", line};
      case '[': ++pos_; return {Tok::lbracket, "[", line};
      case ']': ++pos_; return {Tok::rbracket, "]", line};
      case '=': ++pos_; return {Tok::equals, "=", line};
      case ';': ++pos_; return {Tok::semi, ";", line};
      case ',': ++pos_; return {Tok::comma, ",", line};
      default: break;
    }
    if (ch == '-' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == '>' || src_[pos_ + 1] == '-')) {
      pos_ += 2;
      return src_[pos_ - 1] == '>' ? Token{Tok::arrow, "->", line}
                                   : Token{Tok::undirected, "--", line};
    }
    if (ch == '"') return quoted();
    if (is_id_start(ch)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (is_id_start(src_[pos_]) ||
                                    std::isdigit(static_cast<unsigned char>(src_[pos_]))))
        ++pos_;
      return {Tok::id, std::string(src_.substr(start, pos_ - start)), line};
    }
    if (ch == '-' || ch == '.' || std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_++;
      while (pos_ < src_.size() &&
             (src_[pos_] == '.' || std::isdigit(static_cast<unsigned char>(src_[pos_]))))
        ++pos_;
      return {Tok::id, std::string(src_.substr(start, pos_ - start)), line};
    }
    throw ParseError(line, std::string("unexpected character '") + ch + "'");
  }

 private:
  static bool is_id_start(char ch) {
    auto u = static_cast<unsigned char>(ch);
    return std::isalpha(u) || ch == '_' || u >= 0x80;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else if (ch == '#' || src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (src_.substr(pos_, 2) == "/*") {
        auto close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) throw ParseError(line_, "unterminated comment");
        for (std::size_t i = pos_; i < close; ++i)
          if (src_[i] == '\n') ++line_;
        pos_ = close + 2;
      } else {
        return;
      }
    }
  }

  Token quoted() {
    const std::size_t line = line_;
    std::string out;
    ++pos_;
    while (pos_ < src_.size()) {
      char ch = src_[pos_++];
      if (ch == '"') return {Tok::id, out, line};
      if (ch == '\\' && pos_ < src_.size() && src_[pos_] == '"') {
        out += '"';
        ++pos_;
        continue;
      }
      if (ch == '\n') ++line_;
      out += ch;
    }
    throw ParseError(line, "unterminated string");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { advance(); }

  DotGraph parse() {
    DotGraph g;
    if (peek_id("strict")) advance();
    if (peek_id("graph")) throw ParseError(tok_.line, "only digraphs are supported");
    if (!peek_id("digraph")) throw ParseError(tok_.line, "expected 'digraph'");
    advance();
    if (tok_.kind == Tok::id) {
      g.name = tok_.text;
      advance();
    }
    expect(Tok::lbrace, "'{'");
    Scope top;
    statements(g, nullptr, top);
    expect(Tok::rbrace, "'}'");
    if (tok_.kind != Tok::end) throw ParseError(tok_.line, "trailing input after graph");
    return g;
  }

 private:
  struct Scope {
    DotAttrs node_defaults;
    DotAttrs edge_defaults;
  };

  void advance() { tok_ = lex_.next(); }
  bool peek_id(std::string_view word) const { return tok_.kind == Tok::id && tok_.text == word; }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind)
      throw ParseError(tok_.line, std::string("expected ") + what + ", found '" + tok_.text + "'");
    advance();
  }

  std::string id(const char* what) {
    if (tok_.kind != Tok::id)
      throw ParseError(tok_.line, std::string("expected ") + what + ", found '" + tok_.text + "'");
    std::string out = tok_.text;
    advance();
    return out;
  }

  DotAttrs attr_lists() {
    DotAttrs attrs;
    while (tok_.kind == Tok::lbracket) {
      advance();
      while (tok_.kind != Tok::rbracket) {
        std::string key = id("attribute name");
        expect(Tok::equals, "'='");
        attrs[key] = id("attribute value");
        if (tok_.kind == Tok::comma || tok_.kind == Tok::semi) advance();
      }
      advance();
    }
    return attrs;
  }

  static DotAttrs merged(DotAttrs base, const DotAttrs& over) {
    for (const auto& [k, v] : over) base[k] = v;
    return base;
  }

  // `cluster` is where node statements land: null at top level.
  void statements(DotGraph& g, DotCluster* cluster, Scope scope) {
    while (tok_.kind != Tok::rbrace && tok_.kind != Tok::end) {
      statement(g, cluster, scope);
      if (tok_.kind == Tok::semi) advance();
    }
  }

  void statement(DotGraph& g, DotCluster* cluster, Scope& scope) {
    if (tok_.kind == Tok::lbrace || peek_id("subgraph")) {
      std::string name;
      if (peek_id("subgraph")) {
        advance();
        if (tok_.kind == Tok::id) name = id("subgraph name");
      }
      expect(Tok::lbrace, "'{'");
      if (cluster == nullptr) {
        g.clusters.push_back(DotCluster{name, {}, {}});
        // Index, not pointer: nested statements do not add clusters at this level.
        const std::size_t at = g.clusters.size() - 1;
        statements(g, &g.clusters[at], scope);
      } else {
        statements(g, cluster, scope);
      }
      expect(Tok::rbrace, "'}'");
      return;
    }
    if (peek_id("graph") || peek_id("node") || peek_id("edge")) {
      std::string which = tok_.text;
      advance();
      DotAttrs attrs = attr_lists();
      if (which == "node") scope.node_defaults = merged(scope.node_defaults, attrs);
      else if (which == "edge") scope.edge_defaults = merged(scope.edge_defaults, attrs);
      else {
        auto& target = cluster ? cluster->attrs : g.attrs;
        target = merged(target, attrs);
      }
      return;
    }
    std::string first = id("statement");
    if (tok_.kind == Tok::equals) {
      advance();
      std::string value = id("attribute value");
      (cluster ? cluster->attrs : g.attrs)[first] = value;
      return;
    }
    if (tok_.kind == Tok::undirected) throw ParseError(tok_.line, "'--' is not valid in a digraph");
    if (tok_.kind == Tok::arrow) {
      std::vector<std::string> chain{first};
      while (tok_.kind == Tok::arrow) {
        advance();
        chain.push_back(id("edge target"));
      }
      DotAttrs attrs = merged(scope.edge_defaults, attr_lists());
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        g.edges.push_back(DotEdge{chain[i], chain[i + 1], attrs});
      return;
    }
    DotAttrs attrs = merged(scope.node_defaults, attr_lists());
    (cluster ? cluster->nodes : g.nodes).push_back(DotNode{first, attrs});
  }

  Lexer lex_;
  Token tok_{Tok::end, "", 0};
};

}  // namespace

DotGraph parse_dot(std::string_view text) { return Parser(text).parse(); }

}  // namespace josephus
