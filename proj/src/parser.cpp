// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/parser.hpp"

#include "gnc/lexer.hpp"

namespace gnc {

namespace {

class Parser {
public:
    Parser(const std::vector<Token>& tokens, int max_depth)
        : tokens_(tokens), max_depth_(max_depth) {}

    Ast parse_program() {
        Ast ast;
        while (!at(TokenKind::EndOfFile)) {
            ast.functions.push_back(parse_function());
        }
        ast.token_count = tokens_.size() - 1;  // exclude end-of-file
        return ast;
    }

private:
    const std::vector<Token>& tokens_;
    size_t i_ = 0;
    int depth_ = 0;
    int max_depth_;

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > p.max_depth_)
                throw ParseDepthExceeded(p.peek().pos, p.max_depth_);
        }
        ~DepthGuard() { --p.depth_; }
    };

    const Token& peek() const { return tokens_[i_]; }

    bool at(TokenKind kind) const { return peek().kind == kind; }

    bool at(TokenKind kind, std::string_view text) const {
        return peek().kind == kind && peek().text == text;
    }

    bool at_keyword(std::string_view kw) const { return at(TokenKind::Keyword, kw); }

    const Token& advance() { return tokens_[i_++]; }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::EndOfFile) return "end of file";
        return "`" + t.text + "`";
    }

    [[noreturn]] void fail(std::string expected) {
        throw ParseError(peek().pos, std::move(expected), describe(peek()));
    }

    const Token& expect(TokenKind kind, std::string_view text) {
        if (!at(kind, text)) fail("`" + std::string(text) + "`");
        return advance();
    }

    const Token& expect_identifier() {
        if (!at(TokenKind::Identifier)) fail("identifier");
        return advance();
    }

    bool eat(TokenKind kind, std::string_view text) {
        if (!at(kind, text)) return false;
        advance();
        return true;
    }

    Type parse_type() {
        if (at_keyword("int")) { advance(); return Type::Int; }
        if (at_keyword("bool")) { advance(); return Type::Bool; }
        fail("type");
    }

    Function parse_function() {
        SourcePos pos = peek().pos;
        if (!eat(TokenKind::Keyword, "fn")) fail("`fn`");
        std::string name = expect_identifier().text;
        expect(TokenKind::Punct, "(");
        std::vector<Param> params;
        if (!at(TokenKind::Punct, ")")) {
            do {
                SourcePos ppos = peek().pos;
                std::string pname = expect_identifier().text;
                expect(TokenKind::Punct, ":");
                params.push_back({std::move(pname), parse_type(), ppos});
            } while (eat(TokenKind::Punct, ","));
        }
        expect(TokenKind::Punct, ")");
        expect(TokenKind::Operator, "->");
        Type ret = parse_type();
        Block body = parse_block();
        return {std::move(name), std::move(params), ret, std::move(body), pos};
    }

    Block parse_block() {
        DepthGuard guard(*this);
        expect(TokenKind::Punct, "{");
        Block block;
        while (!at(TokenKind::Punct, "}")) {
            if (at(TokenKind::EndOfFile)) fail("`}`");
            block.push_back(parse_stmt());
        }
        advance();
        return block;
    }

    Stmt parse_stmt() {
        SourcePos pos = peek().pos;

        if (at_keyword("let")) {
            advance();
            std::string name = expect_identifier().text;
            std::optional<Type> annot;
            if (eat(TokenKind::Punct, ":")) annot = parse_type();
            expect(TokenKind::Operator, "=");
            Expr init = parse_expr();
            expect(TokenKind::Punct, ";");
            return {LetStmt{std::move(name), annot, std::move(init), {}}, pos};
        }

        if (at_keyword("if")) return parse_if();

        if (at_keyword("while")) {
            advance();
            expect(TokenKind::Punct, "(");
            Expr cond = parse_expr();
            expect(TokenKind::Punct, ")");
            Block body = parse_block();
            return {WhileStmt{std::move(cond), std::move(body)}, pos};
        }

        if (at_keyword("return")) {
            advance();
            Expr value = parse_expr();
            expect(TokenKind::Punct, ";");
            return {ReturnStmt{std::move(value)}, pos};
        }

        // `name = expr;` is an assignment; anything else is an expression
        // statement. One token of lookahead disambiguates.
        if (at(TokenKind::Identifier) && tokens_[i_ + 1].kind == TokenKind::Operator &&
            tokens_[i_ + 1].text == "=") {
            std::string name = advance().text;
            advance();  // `=`
            Expr value = parse_expr();
            expect(TokenKind::Punct, ";");
            return {AssignStmt{std::move(name), std::move(value), {}}, pos};
        }

        Expr e = parse_expr();
        expect(TokenKind::Punct, ";");
        return {ExprStmt{std::move(e)}, pos};
    }

    Stmt parse_if() {
        DepthGuard guard(*this);
        SourcePos pos = peek().pos;
        advance();  // `if`
        expect(TokenKind::Punct, "(");
        Expr cond = parse_expr();
        expect(TokenKind::Punct, ")");
        Block then_block = parse_block();
        IfStmt node{std::move(cond), std::move(then_block), std::monostate{}};
        if (eat(TokenKind::Keyword, "else")) {
            if (at_keyword("if")) {
                node.else_arm = Box<Stmt>(parse_if());
            } else {
                node.else_arm = parse_block();
            }
        }
        return {std::move(node), pos};
    }

    Expr parse_expr() {
        DepthGuard guard(*this);
        return parse_or();
    }

    // Binary levels, loosest first: || then && then comparisons then
    // additive then multiplicative. All left-associative.
    Expr parse_or() {
        Expr lhs = parse_and();
        while (at(TokenKind::Operator, "||")) {
            SourcePos pos = advance().pos;
            Expr rhs = parse_and();
            lhs = {BinaryExpr{BinaryOp::Or, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))},
                   pos, {}};
        }
        return lhs;
    }

    Expr parse_and() {
        Expr lhs = parse_cmp();
        while (at(TokenKind::Operator, "&&")) {
            SourcePos pos = advance().pos;
            Expr rhs = parse_cmp();
            lhs = {BinaryExpr{BinaryOp::And, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))},
                   pos, {}};
        }
        return lhs;
    }

    static std::optional<BinaryOp> cmp_op(const Token& t) {
        if (t.kind != TokenKind::Operator) return {};
        if (t.text == "<") return BinaryOp::Lt;
        if (t.text == "<=") return BinaryOp::Le;
        if (t.text == ">") return BinaryOp::Gt;
        if (t.text == ">=") return BinaryOp::Ge;
        if (t.text == "==") return BinaryOp::Eq;
        if (t.text == "!=") return BinaryOp::Ne;
        return {};
    }

    Expr parse_cmp() {
        Expr lhs = parse_add();
        while (auto op = cmp_op(peek())) {
            SourcePos pos = advance().pos;
            Expr rhs = parse_add();
            lhs = {BinaryExpr{*op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))}, pos, {}};
        }
        return lhs;
    }

    Expr parse_add() {
        Expr lhs = parse_mul();
        for (;;) {
            BinaryOp op;
            if (at(TokenKind::Operator, "+")) op = BinaryOp::Add;
            else if (at(TokenKind::Operator, "-")) op = BinaryOp::Sub;
            else break;
            SourcePos pos = advance().pos;
            Expr rhs = parse_mul();
            lhs = {BinaryExpr{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))}, pos, {}};
        }
        return lhs;
    }

    Expr parse_mul() {
        Expr lhs = parse_unary();
        for (;;) {
            BinaryOp op;
            if (at(TokenKind::Operator, "*")) op = BinaryOp::Mul;
            else if (at(TokenKind::Operator, "/")) op = BinaryOp::Div;
            else break;
            SourcePos pos = advance().pos;
            Expr rhs = parse_unary();
            lhs = {BinaryExpr{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))}, pos, {}};
        }
        return lhs;
    }

    Expr parse_unary() {
        if (at(TokenKind::Operator, "-")) {
            DepthGuard guard(*this);
            SourcePos pos = advance().pos;
            Expr operand = parse_unary();
            return {UnaryNeg{Box<Expr>(std::move(operand))}, pos, {}};
        }
        return parse_primary();
    }

    Expr parse_primary() {
        SourcePos pos = peek().pos;

        if (at(TokenKind::IntLiteral)) {
            int64_t v = advance().int_value;
            return {IntLit{v}, pos, {}};
        }
        if (at_keyword("true")) { advance(); return {BoolLit{true}, pos, {}}; }
        if (at_keyword("false")) { advance(); return {BoolLit{false}, pos, {}}; }

        if (at(TokenKind::Punct, "(")) {
            advance();
            Expr inner = parse_expr();
            expect(TokenKind::Punct, ")");
            return inner;
        }

        if (at(TokenKind::Identifier)) {
            std::string name = advance().text;
            if (eat(TokenKind::Punct, "(")) {
                std::vector<Expr> args;
                if (!at(TokenKind::Punct, ")")) {
                    do {
                        args.push_back(parse_expr());
                    } while (eat(TokenKind::Punct, ","));
                }
                expect(TokenKind::Punct, ")");
                return {CallExpr{std::move(name), std::move(args), {}}, pos, {}};
            }
            return {VarRef{std::move(name), {}}, pos, {}};
        }

        fail("expression");
    }
};

}  // namespace

Ast parse_tokens(const std::vector<Token>& tokens, int max_depth) {
    return Parser(tokens, max_depth).parse_program();
}

Ast parse(std::string_view source, int max_depth) {
    return parse_tokens(lex(source), max_depth);
}

}  // namespace gnc
