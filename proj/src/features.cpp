// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/features.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gnc {

namespace {

struct Walker {
    FeatureVector features;
    std::set<std::string>* callees = nullptr;  // collected per function

    void expr(const Expr& e) {
        if (const auto* n = std::get_if<UnaryNeg>(&e.node)) {
            expr(*n->operand);
        } else if (const auto* n = std::get_if<BinaryExpr>(&e.node)) {
            expr(*n->lhs);
            expr(*n->rhs);
        } else if (const auto* n = std::get_if<CallExpr>(&e.node)) {
            features.call_count++;
            if (callees) callees->insert(n->callee);
            for (const auto& a : n->args) expr(a);
        }
    }

    void block(const Block& b, uint32_t depth) {
        features.nesting_depth = std::max(features.nesting_depth, depth);
        for (const auto& s : b) stmt(s, depth);
    }

    void stmt(const Stmt& s, uint32_t depth) {
        if (const auto* n = std::get_if<LetStmt>(&s.node)) {
            expr(n->init);
        } else if (const auto* n = std::get_if<AssignStmt>(&s.node)) {
            expr(n->value);
        } else if (const auto* n = std::get_if<IfStmt>(&s.node)) {
            expr(n->cond);
            block(n->then_block, depth + 1);
            if (const auto* eb = std::get_if<Block>(&n->else_arm)) {
                block(*eb, depth + 1);
            } else if (const auto* chained = std::get_if<Box<Stmt>>(&n->else_arm)) {
                // `else if` reads as a sibling of the `if`, not a deeper nest.
                stmt(**chained, depth);
            }
        } else if (const auto* n = std::get_if<WhileStmt>(&s.node)) {
            features.loop_count++;
            expr(n->cond);
            block(n->body, depth + 1);
        } else if (const auto* n = std::get_if<ReturnStmt>(&s.node)) {
            expr(n->value);
        } else if (const auto* n = std::get_if<ExprStmt>(&s.node)) {
            expr(n->expr);
        }
    }
};

// True when the name-resolved call graph has a cycle reachable from any
// function. Calls to undeclared names are ignored here; typecheck is the
// place that rejects them.
bool call_graph_has_cycle(const std::map<std::string, std::set<std::string>>& graph) {
    enum class Mark { Unvisited, InProgress, Done };
    std::map<std::string, Mark> marks;
    for (const auto& [name, _] : graph) marks[name] = Mark::Unvisited;

    std::function<bool(const std::string&)> visit = [&](const std::string& name) {
        Mark& m = marks[name];
        if (m == Mark::InProgress) return true;
        if (m == Mark::Done) return false;
        m = Mark::InProgress;
        for (const auto& callee : graph.at(name)) {
            if (graph.count(callee) && visit(callee)) return true;
        }
        m = Mark::Done;
        return false;
    };

    for (const auto& [name, _] : graph) {
        if (marks[name] == Mark::Unvisited && visit(name)) return true;
    }
    return false;
}

}  // namespace

FeatureVector extract_features(const Ast& ast) {
    Walker w;
    w.features.source_len = static_cast<uint32_t>(ast.token_count);
    w.features.function_count = static_cast<uint32_t>(ast.functions.size());

    std::map<std::string, std::set<std::string>> call_graph;
    for (const auto& fn : ast.functions) {
        auto& callees = call_graph[fn.name];
        w.callees = &callees;
        w.block(fn.body, 1);
    }
    w.callees = nullptr;

    w.features.has_recursion = call_graph_has_cycle(call_graph);
    return w.features;
}

}  // namespace gnc
