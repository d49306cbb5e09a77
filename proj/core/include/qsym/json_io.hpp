#pragma once

#include <string>
#include <vector>

#include "qsym/bijections.hpp"
#include "qsym/composition.hpp"
#include "qsym/expansions.hpp"
#include "qsym/filling.hpp"
#include "qsym/insertion.hpp"
#include "qsym/qsym_element.hpp"
#include "qsym/transition.hpp"

namespace qsym {

/*
 * JSON serialization with a plain-string interface (the JSON library stays
 * an implementation detail).  Layouts:
 *
 *   Composition       {"parts": [2,1,2,1]}
 *   Filling           {"kind": "RSCT", "shape": [2,1], "rows": [[2,1],[2]]}
 *   QSymElement       {"basis": "F", "degree": 4,
 *                      "terms": [{"parts": [2,2], "coeff": 1}, ...]}
 *   TransitionMatrix  {"from": "RS", "to": "F", "degree": 4,
 *                      "rows": ["4", "3,1", ...], "cols": [...],
 *                      "entries": [[...], ...]}
 *
 * Coefficients are emitted as JSON numbers when they fit in 64 bits and as
 * decimal strings otherwise; the parsers accept both.  Terms, matrix rows
 * and columns keep their in-memory order.
 */
std::string to_json(const Composition& alpha);
std::string to_json(const Filling& f);
std::string to_json(const QSymElement& e);
std::string to_json(const TransitionMatrix& m);
std::string to_json(const ExpansionReport& r);
std::string to_json(const InsertionResult& r);
std::string to_json(const InsertionResult& r, const std::vector<InsertionStep>& steps);
std::string to_json(const BijectionTrace& t);
std::string to_json(const VerificationReport& r);

// Throw std::invalid_argument on malformed input.
Composition composition_from_json(const std::string& text);
Filling filling_from_json(const std::string& text);
QSymElement qsym_element_from_json(const std::string& text);

/*
 * RFC 4180 CSV for a transition matrix: a header row of column labels, then
 * one row per row label.  The top-left cell is empty and every label is
 * double-quoted (composition strings contain commas).  Lines end in LF and
 * the output ends with one.
 */
std::string to_csv(const TransitionMatrix& m);

}  // namespace qsym
