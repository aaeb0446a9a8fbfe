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

#pragma once

#include <minmod/core.hpp>
#include <minmod/transforms.hpp>

#include <string>
#include <vector>

namespace minmod {

// 1-based position of a parse error in the input.
struct SourceSpan {
    int line   = 1;
    int column = 1;
};

struct ParseError : Error {
    ParseError(SourceSpan s, const std::string& what) : Error(what), span(s) {}
    SourceSpan span;
};

// .cnft grammar: one clause per statement terminated by '.'; head atoms
// separated by '|'; '<-' separates head from body; body atoms separated
// by ','; constraints written '<- b1, b2.'; facts 'a.' or 'a <-.';
// comments from '#' to end of line. 'not' and '_phi' are reserved.
Theory parse_theory(std::string_view text);

// Same grammar plus 'not x' body literals; heads stay positive.
LogicProgram parse_program(std::string_view text);

std::string serialize_theory(const Theory& theory);
std::string serialize_program(const LogicProgram& program);

// Bare atom-name list (whitespace/comma separated, '#' comments).
std::vector<std::string> parse_atom_names(std::string_view text);

// Resolves names against a theory, extending the interner for atoms the
// theory never mentions (they are legal in interpretations).
std::pair<Theory, AtomSet> resolve_interpretation(const Theory&             theory,
                                                  const std::vector<std::string>& names);

// Fixed-schema JSON object: status, model (sorted names), iterations, operator.
std::string serialize_result(std::string_view status, const std::vector<std::string>& model,
                             long iterations, std::string_view op);

// Same schema with optional trailing keys (witness, reduct) used by check/stable.
std::string serialize_result_ext(std::string_view status, const std::vector<std::string>& model,
                                 long iterations, std::string_view op,
                                 const std::vector<std::string>* witness,
                                 const std::string*              reduct_text);

} // namespace minmod
