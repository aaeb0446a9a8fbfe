/*
 *  Copyright (C) 2026  minmod contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <minmod/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace minmod {

namespace {

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}

// Recursive-descent scanner over the clause grammar. Tracks 1-based
// line/column for error spans; treats CR, LF and CRLF alike.
class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Theory theory() {
        auto   table = std::make_shared<AtomTable>();
        std::vector<Clause> clauses;
        while (skip_trivia(), !eof())
            clauses.push_back(statement(*table, nullptr));
        return Theory(std::move(table), std::move(clauses));
    }

    LogicProgram program() {
        auto              table = std::make_shared<AtomTable>();
        std::vector<Rule> rules;
        while (skip_trivia(), !eof()) {
            AtomSet neg;
            Clause  c = statement(*table, &neg);
            rules.push_back(Rule{std::move(c.head), std::move(c.body), std::move(neg)});
        }
        return LogicProgram(std::move(table), std::move(rules));
    }

  private:
    std::string_view text_;
    std::size_t      pos_  = 0;
    int              line_ = 1;
    int              col_  = 1;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else if (c == '\r') {
            if (pos_ < text_.size() && text_[pos_] == '\n')
                ++pos_;
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError({line_, col_}, msg + " at line " + std::to_string(line_) + ", column " +
                                            std::to_string(col_));
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n' && peek() != '\r')
                    ++pos_, ++col_;
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else {
                break;
            }
        }
    }

    bool try_consume(std::string_view token) {
        skip_trivia();
        if (text_.substr(pos_, token.size()) != token)
            return false;
        for (std::size_t i = 0; i < token.size(); ++i)
            advance();
        return true;
    }

    std::string identifier() {
        skip_trivia();
        if (eof() || !ident_start(peek()))
            fail("expected an atom name");
        std::string name;
        while (!eof() && ident_char(peek()))
            name.push_back(advance());
        if (name == kPhiAtom)
            fail("'_phi' is reserved for the positive-form transform");
        if (name == "not")
            fail("'not' is a reserved keyword");
        return name;
    }

    // One clause/rule up to and including '.'. When `neg` is null, 'not'
    // literals are rejected (theory mode).
    Clause statement(AtomTable& table, AtomSet* neg) {
        Clause c;

        skip_trivia();
        if (eof())
            fail("expected a statement");

        bool has_head = !starts_with("<-");
        if (has_head) {
            c.head.insert(table.intern(identifier()));
            while (try_consume("|"))
                c.head.insert(table.intern(identifier()));
        }

        if (try_consume("<-")) {
            skip_trivia();
            if (!eof() && peek() != '.') {
                body_literal(table, c, neg);
                while (try_consume(","))
                    body_literal(table, c, neg);
            }
        } else if (!has_head) {
            fail("expected a clause");
        }

        if (!try_consume("."))
            fail("expected '.'");
        return c;
    }

    bool starts_with(std::string_view token) {
        skip_trivia();
        return text_.substr(pos_, token.size()) == token;
    }

    void body_literal(AtomTable& table, Clause& c, AtomSet* neg) {
        skip_trivia();
        if (text_.substr(pos_, 3) == "not" && (pos_ + 3 >= text_.size() || !ident_char(text_[pos_ + 3]))) {
            if (!neg)
                fail("'not' literals are only allowed in logic programs");
            for (int i = 0; i < 3; ++i)
                advance();
            neg->insert(table.intern(identifier()));
            return;
        }
        c.body.insert(table.intern(identifier()));
    }
};

// Atoms print in name order so that equal sets serialize identically
// regardless of the interning history.
void write_atoms(std::ostringstream& os, const AtomTable& table, const AtomSet& set,
                 const char* sep) {
    std::vector<std::string> names;
    names.reserve(set.size());
    for (AtomId a : set)
        names.push_back(table.name(a));
    std::sort(names.begin(), names.end());
    bool first = true;
    for (const std::string& n : names) {
        if (!first)
            os << sep;
        os << n;
        first = false;
    }
}

} // namespace

Theory parse_theory(std::string_view text) {
    return Parser(text).theory();
}

LogicProgram parse_program(std::string_view text) {
    return Parser(text).program();
}

std::string serialize_theory(const Theory& theory) {
    std::ostringstream os;
    for (const Clause& c : theory.clauses()) {
        if (c.is_fact()) {
            os << theory.atoms().name(c.head.ids().front()) << ".\n";
            continue;
        }
        write_atoms(os, theory.atoms(), c.head, " | ");
        if (!c.head.empty())
            os << ' ';
        os << "<-";
        if (!c.body.empty()) {
            os << ' ';
            write_atoms(os, theory.atoms(), c.body, ", ");
        }
        os << ".\n";
    }
    return os.str();
}

std::string serialize_program(const LogicProgram& program) {
    std::ostringstream os;
    for (const Rule& r : program.rules) {
        write_atoms(os, *program.atoms, r.head, " | ");
        if (!r.head.empty())
            os << ' ';
        os << "<-";
        std::vector<std::string> pos, neg;
        for (AtomId a : r.body)
            pos.push_back(program.atoms->name(a));
        for (AtomId a : r.neg_body)
            neg.push_back(program.atoms->name(a));
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        bool first = true;
        for (const std::string& n : pos) {
            os << (first ? " " : ", ") << n;
            first = false;
        }
        for (const std::string& n : neg) {
            os << (first ? " not " : ", not ") << n;
            first = false;
        }
        os << ".\n";
    }
    return os.str();
}

std::vector<std::string> parse_atom_names(std::string_view text) {
    std::vector<std::string> out;
    std::size_t              i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (ident_start(c)) {
            std::string name;
            while (i < text.size() && ident_char(text[i]))
                name.push_back(text[i++]);
            out.push_back(std::move(name));
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == '{' ||
                   c == '}') {
            ++i;
        } else {
            throw ParseError({1, static_cast<int>(i) + 1},
                             std::string("unexpected character '") + c + "' in atom list");
        }
    }
    return out;
}

std::pair<Theory, AtomSet> resolve_interpretation(const Theory&                   theory,
                                                  const std::vector<std::string>& names) {
    auto table = std::make_shared<AtomTable>();
    for (AtomId a = 0; a < theory.atoms().size(); ++a)
        table->intern(theory.atoms().name(a));
    AtomSet set;
    for (const std::string& n : names)
        set.insert(table->intern(n));
    return {Theory(std::move(table), theory.clauses()), std::move(set)};
}

std::string serialize_result(std::string_view status, const std::vector<std::string>& model,
                             long iterations, std::string_view op) {
    return serialize_result_ext(status, model, iterations, op, nullptr, nullptr);
}

std::string serialize_result_ext(std::string_view status, const std::vector<std::string>& model,
                                 long iterations, std::string_view op,
                                 const std::vector<std::string>* witness,
                                 const std::string*              reduct_text) {
    nlohmann::ordered_json j;
    j["status"]     = status;
    j["model"]      = model;
    j["iterations"] = iterations;
    j["operator"]   = op;
    if (witness)
        j["witness"] = *witness;
    if (reduct_text)
        j["reduct"] = *reduct_text;
    return j.dump();
}

} // namespace minmod
