#include "sst/notation.hpp"

namespace sst::notation {
namespace {

DiagnosticKind map_kind(LinkErrorKind k) {
    switch (k) {
        case LinkErrorKind::UnknownAlias: return DiagnosticKind::UnknownAlias;
        case LinkErrorKind::ForbiddenTransition: return DiagnosticKind::ForbiddenTransition;
        case LinkErrorKind::NegativeWeight: return DiagnosticKind::InvalidWeight;
        case LinkErrorKind::DuplicateLink: return DiagnosticKind::DuplicateLink;
        case LinkErrorKind::UnknownNode: return DiagnosticKind::UndeclaredEndpoint;
    }
    return DiagnosticKind::UndeclaredEndpoint;
}

}  // namespace

std::string_view to_string(DiagnosticKind k) {
    switch (k) {
        case DiagnosticKind::UnknownAlias: return "unknown-alias";
        case DiagnosticKind::ForbiddenTransition: return "forbidden-transition";
        case DiagnosticKind::UndeclaredEndpoint: return "undeclared-endpoint";
        case DiagnosticKind::AmbiguousEndpoint: return "ambiguous-endpoint";
        case DiagnosticKind::DuplicateLink: return "duplicate-link";
        case DiagnosticKind::InvalidWeight: return "invalid-weight";
        case DiagnosticKind::InvalidNode: return "invalid-node";
    }
    return "diagnostic";
}

BuildResult build(const Document& doc, const AliasTable& base_aliases) {
    AliasTable local;
    for (const auto& stmt : doc.statements) {
        if (const auto* alias = std::get_if<AliasDecl>(&stmt.value)) {
            local.add(alias->label, alias->typ);
        }
    }

    BuildResult result{Graph(base_aliases.overlaid_with(local)), {}};
    Graph& g = result.graph;
    auto diagnose = [&](DiagnosticKind kind, int line, std::string message) {
        result.diagnostics.push_back(BuildDiagnostic{kind, line, std::move(message)});
    };

    // Declared nodes first, so later link statements can refer back by name.
    for (const auto& stmt : doc.statements) {
        const auto* decl = std::get_if<NodeDecl>(&stmt.value);
        if (!decl) continue;
        if (decl->name.empty()) {
            diagnose(DiagnosticKind::InvalidNode, stmt.line, "node name must not be empty");
            continue;
        }
        g.add_node(decl->name, decl->meta, decl->attrs);
    }

    auto resolve_endpoint = [&](const Endpoint& ep, int line) -> std::optional<NodeId> {
        if (ep.name.empty()) {
            diagnose(DiagnosticKind::InvalidNode, line, "endpoint name must not be empty");
            return std::nullopt;
        }
        if (ep.meta) return g.add_node(ep.name, *ep.meta);
        auto candidates = g.find_nodes_named(ep.name);
        if (candidates.empty()) {
            diagnose(DiagnosticKind::UndeclaredEndpoint, line,
                     "endpoint \"" + ep.name + "\" is not declared and carries no :meta suffix");
            return std::nullopt;
        }
        if (candidates.size() > 1) {
            diagnose(DiagnosticKind::AmbiguousEndpoint, line,
                     "endpoint \"" + ep.name +
                         "\" is declared under several meta-types; qualify it with :meta");
            return std::nullopt;
        }
        return candidates.front();
    };

    for (const auto& stmt : doc.statements) {
        const auto* decl = std::get_if<LinkDecl>(&stmt.value);
        if (!decl) continue;
        auto src = resolve_endpoint(decl->src, stmt.line);
        auto dst = resolve_endpoint(decl->dst, stmt.line);
        if (!src || !dst) continue;
        LinkResult added = g.add_link(*src, decl->label, *dst, decl->weight.value_or(1.0));
        if (const auto* err = std::get_if<LinkError>(&added)) {
            diagnose(map_kind(err->kind), stmt.line, err->message);
        }
    }
    return result;
}

}  // namespace sst::notation
