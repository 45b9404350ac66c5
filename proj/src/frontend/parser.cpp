#include "qhdl/frontend/parser.hpp"

namespace qhdl::frontend {

SyntaxError::SyntaxError(SourceSpan span, std::string expected, std::string found)
    : Error("expected " + expected + ", found " + found, std::move(span)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

// Span from the start of `first` to the end of `last` when both sit on the
// same line, otherwise just `first`.
SourceSpan cover(const SourceSpan& first, const SourceSpan& last) {
    SourceSpan s = first;
    if (last.line == first.line && last.column >= first.column) {
        s.length = last.column + last.length - first.column;
    }
    return s;
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::string file) : toks_(tokens), file_(std::move(file)) {}

    DesignFile design_file() {
        DesignFile df;
        while (!at_end()) {
            const Token& t = cur();
            if (t.is_keyword("library")) {
                df.context_clauses.emplace_back(library_clause());
            } else if (t.is_keyword("use")) {
                df.context_clauses.emplace_back(use_clause());
            } else if (t.is_keyword("entity")) {
                df.entities.push_back(entity_decl());
            } else if (t.is_keyword("architecture")) {
                df.architectures.push_back(architecture_body());
            } else {
                fail("'library', 'use', 'entity' or 'architecture'");
            }
        }
        return df;
    }

private:
    bool at_end() const { return pos_ >= toks_.size(); }

    const Token& cur() const { return toks_[pos_]; }

    const Token* peek(std::size_t ahead) const {
        return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
    }

    const Token& prev() const { return toks_[pos_ - 1]; }

    SourceSpan here() const {
        if (!at_end()) return cur().span;
        if (toks_.empty()) return SourceSpan{file_, 1, 1, 0};
        SourceSpan s = toks_.back().span;
        s.column += s.length;
        s.length = 0;
        return s;
    }

    std::string describe_current() const {
        if (at_end()) return "end of file";
        const Token& t = cur();
        switch (t.kind) {
            case TokenKind::keyword: return "keyword '" + t.text + "'";
            case TokenKind::identifier: return "identifier '" + t.text + "'";
            default: return "'" + t.text + "'";
        }
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(here(), expected, describe_current());
    }

    bool accept_keyword(std::string_view kw) {
        if (!at_end() && cur().is_keyword(kw)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_symbol(std::string_view sym) {
        if (!at_end() && cur().is_symbol(sym)) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect_keyword(std::string_view kw) {
        if (!accept_keyword(kw)) fail("'" + std::string(kw) + "'");
        return prev();
    }

    const Token& expect_symbol(std::string_view sym) {
        if (!accept_symbol(sym)) fail("'" + std::string(sym) + "'");
        return prev();
    }

    Identifier identifier(const char* what = "identifier") {
        if (at_end() || cur().kind != TokenKind::identifier) fail(what);
        const Token& t = toks_[pos_++];
        return Identifier{t.text, t.span};
    }

    std::vector<Identifier> identifier_list() {
        std::vector<Identifier> ids;
        ids.push_back(identifier());
        while (accept_symbol(",")) ids.push_back(identifier());
        return ids;
    }

    // `end [keyword] [name] ;` closing a named unit.
    void unit_end(std::string_view keyword, const Identifier& name) {
        expect_keyword("end");
        accept_keyword(keyword);
        if (!at_end() && cur().kind == TokenKind::identifier) {
            if (cur().text != name.text) fail("'" + name.text + "'");
            ++pos_;
        }
        expect_symbol(";");
    }

    LibraryClause library_clause() {
        LibraryClause lc;
        const Token& kw = expect_keyword("library");
        lc.names = identifier_list();
        lc.span = cover(kw.span, expect_symbol(";").span);
        return lc;
    }

    UseClause use_clause() {
        UseClause uc;
        const Token& kw = expect_keyword("use");
        static constexpr std::string_view kPath[] = {"qhdl", "std"};
        for (std::size_t i = 0; i < 2; ++i) {
            if (i > 0) expect_symbol(".");
            if (at_end() || cur().kind != TokenKind::identifier || cur().text != kPath[i]) {
                fail("'" + std::string(kPath[i]) + "' (only 'use qhdl.std.all;' is supported)");
            }
            uc.path.push_back(identifier());
        }
        expect_symbol(".");
        const Token& all = expect_keyword("all");
        uc.path.push_back(Identifier{all.text, all.span});
        uc.span = cover(kw.span, expect_symbol(";").span);
        return uc;
    }

    TypeMark type_mark() {
        if (accept_keyword("bit")) return TypeMark::bit;
        if (accept_keyword("qbit")) return TypeMark::qbit;
        fail("type 'bit' or 'qbit'");
    }

    EntityDecl entity_decl() {
        EntityDecl ent;
        const Token& kw = expect_keyword("entity");
        ent.name = identifier("entity name");
        expect_keyword("is");
        if (accept_keyword("port")) {
            expect_symbol("(");
            do {
                auto names = identifier_list();
                expect_symbol(":");
                PortMode mode = PortMode::in;
                if (accept_keyword("in")) {
                    mode = PortMode::in;
                } else if (accept_keyword("out")) {
                    mode = PortMode::out;
                } else if (!at_end() && cur().is_keyword("inout")) {
                    fail("port mode 'in' or 'out' ('inout' is not part of QHDL)");
                }
                TypeMark type = type_mark();
                for (auto& n : names) {
                    SourceSpan span = n.span;
                    ent.ports.push_back(PortDecl{std::move(n), mode, type, span});
                }
            } while (accept_symbol(";"));
            expect_symbol(")");
            expect_symbol(";");
        }
        unit_end("entity", ent.name);
        ent.span = cover(kw.span, ent.name.span);
        return ent;
    }

    ArchitectureBody architecture_body() {
        ArchitectureBody arch;
        const Token& kw = expect_keyword("architecture");
        arch.name = identifier("architecture name");
        expect_keyword("of");
        arch.entity_name = identifier("entity name");
        expect_keyword("is");
        arch.span = cover(kw.span, arch.entity_name.span);

        while (!accept_keyword("begin")) {
            if (at_end()) fail("'begin'");
            if (cur().is_keyword("signal")) {
                signal_decl(arch);
            } else if (cur().is_keyword("component")) {
                arch.non_quantum.push_back(
                    skip_until_end(NonQuantumStatement::Kind::component_declaration, std::nullopt, "component"));
            } else {
                fail("'signal' or 'begin'");
            }
        }

        while (!at_end() && !cur().is_keyword("end")) {
            concurrent_statement(arch);
        }
        unit_end("architecture", arch.name);
        return arch;
    }

    void signal_decl(ArchitectureBody& arch) {
        expect_keyword("signal");
        auto names = identifier_list();
        expect_symbol(":");
        TypeMark type = type_mark();
        expect_symbol(";");
        for (auto& n : names) {
            SourceSpan span = n.span;
            arch.signals.push_back(SignalDecl{std::move(n), type, span});
        }
    }

    void concurrent_statement(ArchitectureBody& arch) {
        if (cur().is_keyword("process")) {
            arch.non_quantum.push_back(skip_until_end(NonQuantumStatement::Kind::process, std::nullopt, "process"));
            return;
        }
        if (cur().kind != TokenKind::identifier) fail("instance label or 'end'");
        if (const Token* next = peek(1); next && next->is_symbol("<=")) {
            arch.non_quantum.push_back(skip_assignment(std::nullopt));
            return;
        }
        Identifier label = identifier("instance label");
        expect_symbol(":");
        if (at_end()) fail("component name");
        if (cur().is_keyword("process")) {
            arch.non_quantum.push_back(skip_until_end(NonQuantumStatement::Kind::process, label, "process"));
            return;
        }
        if (const Token* next = peek(1); cur().kind == TokenKind::identifier && next && next->is_symbol("<=")) {
            arch.non_quantum.push_back(skip_assignment(label));
            return;
        }
        arch.instances.push_back(component_instance(std::move(label)));
    }

    ComponentInstance component_instance(Identifier label) {
        ComponentInstance inst;
        inst.span = label.span;
        inst.label = std::move(label);
        accept_keyword("component");
        inst.component = identifier("component name");
        if (accept_keyword("port")) {
            expect_keyword("map");
            expect_symbol("(");
            do {
                Association assoc;
                Identifier first = identifier("formal or actual signal name");
                if (accept_symbol("=>")) {
                    assoc.formal = std::move(first);
                    assoc.actual = identifier("actual signal name");
                    assoc.span = cover(assoc.formal->span, assoc.actual.span);
                } else {
                    assoc.actual = std::move(first);
                    assoc.span = assoc.actual.span;
                }
                inst.port_map.push_back(std::move(assoc));
            } while (accept_symbol(","));
            expect_symbol(")");
        }
        expect_symbol(";");
        return inst;
    }

    // Consumes `<kw> ... end <kw> [label] ;`, keeping the tokens as text.
    NonQuantumStatement skip_until_end(NonQuantumStatement::Kind kind, std::optional<Identifier> label,
                                       std::string_view kw) {
        NonQuantumStatement st;
        st.kind = kind;
        st.span = label ? label->span : cur().span;
        st.label = std::move(label);
        for (;;) {
            if (at_end()) fail("'end " + std::string(kw) + "'");
            if (cur().is_keyword("end")) {
                if (const Token* next = peek(1); next && next->is_keyword(kw)) break;
            }
            st.text.push_back(render(toks_[pos_++]));
        }
        st.text.push_back(render(toks_[pos_++]));
        st.text.push_back(render(toks_[pos_++]));
        if (!at_end() && cur().kind == TokenKind::identifier) st.text.push_back(render(toks_[pos_++]));
        expect_symbol(";");
        st.text.push_back(";");
        return st;
    }

    NonQuantumStatement skip_assignment(std::optional<Identifier> label) {
        NonQuantumStatement st;
        st.kind = NonQuantumStatement::Kind::signal_assignment;
        st.span = label ? label->span : cur().span;
        st.label = std::move(label);
        while (!accept_symbol(";")) {
            if (at_end()) fail("';'");
            st.text.push_back(render(toks_[pos_++]));
        }
        st.text.push_back(";");
        return st;
    }

    static std::string render(const Token& t) { return t.text; }

    const std::vector<Token>& toks_;
    std::string file_;
    std::size_t pos_ = 0;
};

}  // namespace

DesignFile parse(const std::vector<Token>& tokens, const std::string& file) {
    return Parser(tokens, file).design_file();
}

DesignFile parse_source(std::string_view source, const std::string& file) {
    return parse(tokenize(source, file), file);
}

}  // namespace qhdl::frontend
