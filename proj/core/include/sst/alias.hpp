#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sst/types.hpp"

namespace sst {

/// Maps human link labels ("causes", "is a part of", ...) onto signed link
/// types. Lookups are case-insensitive after whitespace normalization, and
/// bare type tokens ("+L", "N", ...) always resolve.
class AliasTable {
public:
    AliasTable() = default;

    /// Stock table covering the standard aliases of all four families.
    static const AliasTable& defaults();

    void add(std::string_view label, SignedLinkType typ);
    std::optional<SignedLinkType> resolve(std::string_view label) const;
    bool contains(std::string_view label) const;

    /// Entries of `other` shadow entries of this table.
    AliasTable overlaid_with(const AliasTable& other) const;

    const std::map<std::string, SignedLinkType>& entries() const { return entries_; }
    bool operator==(const AliasTable&) const = default;

    /// Lowercases and collapses whitespace runs; the key form used internally.
    static std::string normalize(std::string_view label);

private:
    std::map<std::string, SignedLinkType> entries_;
};

}  // namespace sst
