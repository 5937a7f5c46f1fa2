#include <cctype>
#include <charconv>

#include "sst/notation.hpp"

namespace sst::notation {
namespace {

// Cursor over a single line. Columns are 1-based.
class LineCursor {
public:
    LineCursor(std::string_view line, int line_no, std::vector<ParseError>& errors)
        : line_(line), line_no_(line_no), errors_(errors) {}

    int column() const { return static_cast<int>(pos_) + 1; }
    std::size_t mark() const { return pos_; }
    bool at_end() const { return pos_ >= line_.size(); }
    char peek() const { return line_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool failed() const { return failed_; }

    void fail(std::string message, std::size_t at, std::size_t len) {
        if (failed_) return;
        failed_ = true;
        len = std::min(len, line_.size() - std::min(at, line_.size()));
        errors_.push_back(ParseError{line_no_, static_cast<int>(at) + 1, std::move(message),
                                     std::string(line_.substr(at, len))});
    }

    void fail_here(std::string message, std::size_t len = 1) {
        if (at_end()) {
            // Anchor end-of-line errors on the last character.
            std::size_t at = line_.empty() ? 0 : line_.size() - 1;
            fail(std::move(message), at, line_.empty() ? 0 : 1);
        } else {
            fail(std::move(message), pos_, len);
        }
    }

    bool expect(char ch, std::string_view what) {
        skip_ws();
        if (!at_end() && peek() == ch) {
            ++pos_;
            return true;
        }
        fail_here("expected '" + std::string(1, ch) + "' " + std::string(what));
        return false;
    }

    // Quoted string with \" and \\ escapes.
    std::optional<std::string> quoted_string(std::string_view what) {
        skip_ws();
        if (at_end() || peek() != '"') {
            fail_here("expected quoted " + std::string(what));
            return std::nullopt;
        }
        std::size_t open = pos_;
        ++pos_;
        std::string out;
        while (!at_end()) {
            char ch = peek();
            if (ch == '\\' && pos_ + 1 < line_.size() &&
                (line_[pos_ + 1] == '"' || line_[pos_ + 1] == '\\')) {
                out += line_[pos_ + 1];
                pos_ += 2;
                continue;
            }
            if (ch == '"') {
                ++pos_;
                return out;
            }
            out += ch;
            ++pos_;
        }
        fail("unterminated string", open, line_.size() - open);
        return std::nullopt;
    }

    // Bare word: letters, digits and +-_. characters.
    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end()) {
            char ch = peek();
            if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' ||
                ch == '_' || ch == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        return std::string(line_.substr(start, pos_ - start));
    }

    std::optional<MetaType> meta_keyword() {
        skip_ws();
        std::size_t start = pos_;
        std::string w = word();
        if (auto m = parse_meta(w)) return m;
        pos_ = start;
        fail_here("expected meta-type (event, thing or concept)", std::max<std::size_t>(w.size(), 1));
        return std::nullopt;
    }

    std::optional<double> real(std::string_view what) {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
        std::string_view text = line_.substr(start, pos_ - start);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
            pos_ = start;
            fail_here("malformed " + std::string(what), std::max<std::size_t>(text.size(), 1));
            return std::nullopt;
        }
        return value;
    }

    // Label between parentheses; parentheses cannot nest or appear in labels.
    std::optional<std::string> paren_label() {
        if (!expect('(', "before the link label")) return std::nullopt;
        std::size_t open = pos_ - 1;
        std::size_t close = line_.find(')', pos_);
        if (close == std::string_view::npos) {
            fail("unterminated link label", open, line_.size() - open);
            return std::nullopt;
        }
        std::string label(line_.substr(pos_, close - pos_));
        pos_ = close + 1;
        // trim
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front())))
            label.erase(label.begin());
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
            label.pop_back();
        if (label.empty()) {
            fail("empty link label", open, close - open + 1);
            return std::nullopt;
        }
        return label;
    }

    void expect_line_end() {
        skip_ws();
        if (!at_end()) fail_here("unexpected trailing text", line_.size() - pos_);
    }

private:
    std::string_view line_;
    int line_no_;
    std::vector<ParseError>& errors_;
    std::size_t pos_ = 0;
    bool failed_ = false;
};

std::optional<Endpoint> parse_endpoint(LineCursor& cur) {
    auto name = cur.quoted_string("endpoint name");
    if (!name) return std::nullopt;
    Endpoint ep{*name, std::nullopt};
    if (!cur.at_end() && cur.peek() == ':') {
        cur.expect(':', "");
        auto meta = cur.meta_keyword();
        if (!meta) return std::nullopt;
        ep.meta = meta;
    }
    return ep;
}

void parse_alias(LineCursor& cur, int line_no, Document& doc) {
    auto label = cur.quoted_string("alias label");
    if (!label) return;
    if (!cur.expect('=', "after the alias label")) return;
    cur.skip_ws();
    std::string tok = cur.word();
    auto typ = SignedLinkType::parse(tok);
    if (!typ) {
        cur.fail_here("unknown link type token (use +L, -L, +C, -C, +E, -E or N)",
                      std::max<std::size_t>(tok.size(), 1));
        return;
    }
    cur.expect_line_end();
    if (!cur.failed()) doc.statements.push_back({line_no, AliasDecl{*label, *typ}});
}

void parse_node(LineCursor& cur, int line_no, Document& doc) {
    auto name = cur.quoted_string("node name");
    if (!name) return;
    if (!cur.expect(':', "after the node name")) return;
    auto meta = cur.meta_keyword();
    if (!meta) return;
    NodeDecl decl{*name, *meta, {}};
    cur.skip_ws();
    while (!cur.at_end() && !cur.failed()) {
        std::string key = cur.word();
        if (key.empty()) {
            cur.fail_here("expected attribute key");
            return;
        }
        if (!cur.expect('=', "after the attribute key")) return;
        auto value = cur.quoted_string("attribute value");
        if (!value) return;
        decl.attrs.insert_or_assign(key, *value);
        cur.skip_ws();
    }
    if (!cur.failed()) doc.statements.push_back({line_no, NodeDecl{std::move(decl)}});
}

void parse_link(LineCursor& cur, int line_no, Document& doc) {
    auto src = parse_endpoint(cur);
    if (!src) return;
    auto label = cur.paren_label();
    if (!label) return;
    cur.skip_ws();
    auto dst = parse_endpoint(cur);
    if (!dst) return;
    LinkDecl decl{*src, *label, *dst, std::nullopt};
    cur.skip_ws();
    if (!cur.at_end()) {
        std::string kw = cur.word();
        if (kw != "weight") {
            cur.fail_here("expected 'weight' or end of line", std::max<std::size_t>(kw.size(), 1));
            return;
        }
        auto w = cur.real("weight");
        if (!w) return;
        decl.weight = w;
    }
    cur.expect_line_end();
    if (!cur.failed()) doc.statements.push_back({line_no, std::move(decl)});
}

}  // namespace

ParseResult parse(std::string_view source, std::string source_name) {
    ParseResult result;
    result.document.source_name = std::move(source_name);

    int line_no = 0;
    std::size_t offset = 0;
    while (offset <= source.size()) {
        std::size_t eol = source.find('\n', offset);
        std::string_view line = source.substr(
            offset, eol == std::string_view::npos ? source.size() - offset : eol - offset);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        LineCursor cur(line, line_no, result.errors);
        cur.skip_ws();
        if (!cur.at_end()) {
            if (cur.peek() == '#') {
                std::size_t hash = line.find('#');
                result.document.statements.push_back(
                    {line_no, Comment{std::string(line.substr(hash + 1))}});
            } else if (cur.peek() == '"') {
                parse_link(cur, line_no, result.document);
            } else {
                std::size_t head_start = cur.mark();
                std::string head = cur.word();
                if (head == "alias") {
                    parse_alias(cur, line_no, result.document);
                } else if (head == "node") {
                    parse_node(cur, line_no, result.document);
                } else {
                    cur.fail("expected 'alias', 'node', a comment or a quoted link statement",
                             head_start, std::max<std::size_t>(head.size(), 1));
                }
            }
        }

        if (eol == std::string_view::npos) break;
        offset = eol + 1;
        if (offset == source.size()) break;  // trailing newline, no extra blank line
    }
    return result;
}

}  // namespace sst::notation
