#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sst/graph.hpp"

namespace sst::notation {

/// Points into the original source; the (line, column) slice always contains
/// `offending_text`.
struct ParseError {
    int line = 1;
    int column = 1;
    std::string message;
    std::string offending_text;

    friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct AliasDecl {
    std::string label;
    SignedLinkType typ = SignedLinkType::near();
    friend bool operator==(const AliasDecl&, const AliasDecl&) = default;
};

struct NodeDecl {
    std::string name;
    MetaType meta = MetaType::Event;
    AttrMap attrs;
    friend bool operator==(const NodeDecl&, const NodeDecl&) = default;
};

struct Endpoint {
    std::string name;
    std::optional<MetaType> meta;  // inline ":meta" suffix
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct LinkDecl {
    Endpoint src;
    std::string label;
    Endpoint dst;
    std::optional<double> weight;
    friend bool operator==(const LinkDecl&, const LinkDecl&) = default;
};

struct Comment {
    std::string text;
    friend bool operator==(const Comment&, const Comment&) = default;
};

struct Statement {
    int line = 1;
    std::variant<AliasDecl, NodeDecl, LinkDecl, Comment> value;

    // line numbers shift under re-serialization and do not affect identity
    friend bool operator==(const Statement& a, const Statement& b) { return a.value == b.value; }
};

struct Document {
    std::string source_name;
    std::vector<Statement> statements;
};

struct ParseResult {
    Document document;
    std::vector<ParseError> errors;
    bool ok() const { return errors.empty(); }
};

/// Parses `.sst` notation. Line-oriented; collects every error in the file
/// rather than stopping at the first. LF and CRLF are both accepted.
ParseResult parse(std::string_view source, std::string source_name = "<input>");

enum class DiagnosticKind {
    UnknownAlias,
    ForbiddenTransition,
    UndeclaredEndpoint,
    AmbiguousEndpoint,
    DuplicateLink,
    InvalidWeight,
    InvalidNode,
};

std::string_view to_string(DiagnosticKind k);

struct BuildDiagnostic {
    DiagnosticKind kind;
    int line = 0;
    std::string message;
};

struct BuildResult {
    Graph graph;
    std::vector<BuildDiagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

/// Materializes a parsed document into a graph. Nodes are created first;
/// links are then validated through the transition table. Alias declarations
/// apply document-wide and shadow `base_aliases`. All violations are
/// collected, each with its source line; offending links are skipped.
BuildResult build(const Document& doc, const AliasTable& base_aliases = AliasTable::defaults());

/// Deterministic text form of a graph: header comment, alias declarations
/// needed by the link labels, nodes sorted by (meta, name), links sorted by
/// (src, family, dst, label). Output re-parses and re-builds to an
/// isomorphic graph. Emits LF line endings.
std::string serialize(const Graph& g);

/// Writes a document back to notation text; re-parsing yields an equal
/// statement list.
std::string serialize(const Document& doc);

}  // namespace sst::notation
