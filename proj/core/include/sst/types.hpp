#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sst {

/// The three node meta-types of the gamma(3,4) representation.
enum class MetaType : std::uint8_t { Event = 0, Thing = 1, Concept = 2 };

/// The four irreducible link families (ST-0..ST-3).
enum class LinkFamily : std::uint8_t { N = 0, L = 1, C = 2, E = 3 };

/// Reading direction of a link relative to its family's canonical relation.
/// NEAR is the only symmetric family; the other three carry a sign.
enum class Orientation : std::uint8_t { Forward = 0, Reverse = 1, Symmetric = 2 };

constexpr std::array<MetaType, 3> all_meta_types{MetaType::Event, MetaType::Thing,
                                                 MetaType::Concept};
constexpr std::array<LinkFamily, 4> all_families{LinkFamily::N, LinkFamily::L, LinkFamily::C,
                                                 LinkFamily::E};

std::string_view to_string(MetaType m);
std::string_view to_string(LinkFamily f);
std::optional<MetaType> parse_meta(std::string_view text);
std::optional<LinkFamily> parse_family(std::string_view text);

/// A link family plus orientation. Invariants are enforced at construction:
/// N is always symmetric, L/C/E are always signed.
class SignedLinkType {
public:
    static SignedLinkType forward(LinkFamily f);
    static SignedLinkType reverse(LinkFamily f);
    static SignedLinkType near();

    /// Parses a type token: "+L", "-L", "+C", "-C", "+E", "-E" or "N".
    static std::optional<SignedLinkType> parse(std::string_view token);

    LinkFamily family() const { return family_; }
    Orientation orientation() const { return orientation_; }
    bool is_forward() const { return orientation_ == Orientation::Forward; }
    bool is_reverse() const { return orientation_ == Orientation::Reverse; }
    bool is_symmetric() const { return orientation_ == Orientation::Symmetric; }

    /// Flips the sign; N maps to itself. Involutive.
    SignedLinkType negated() const;

    /// Canonical token, e.g. "+C" or "N".
    std::string token() const;

    friend auto operator<=>(const SignedLinkType&, const SignedLinkType&) = default;

private:
    SignedLinkType(LinkFamily f, Orientation o) : family_(f), orientation_(o) {}
    LinkFamily family_;
    Orientation orientation_;
};

/// All seven signed types: N, +L, -L, +C, -C, +E, -E.
const std::array<SignedLinkType, 7>& all_signed_types();

/// Opaque node handle, stable for the lifetime of a graph.
struct NodeId {
    std::uint32_t value = 0;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

}  // namespace sst
