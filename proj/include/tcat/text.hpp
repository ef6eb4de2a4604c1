#pragma once

#include "tcat/poset.hpp"
#include "tcat/socle.hpp"

#include <string>

namespace tcat {

// Single diagram: parts separated by ',' or '.', "-" for the empty
// diagram. Throws std::invalid_argument with position info.
YoungDiagram parse_diagram(const std::string& s);
std::string format_diagram(const YoungDiagram& d, char sep = '.');

// Tuple text: three sections separated by '|'; the outer sections list
// diagrams comma-separated with indices decreasing inwards
// (λ_t,...,λ_0 | λ;μ | μ_0,...,μ_t); parts within a diagram use '.'.
DiagramTuple parse_tuple(const std::string& s, int t);
std::string format_tuple(const DiagramTuple& x);

// Degree vectors use the same sectioning with plain integers.
DegreeVector parse_degree(const std::string& s, int t);
std::string format_degree(const DegreeVector& v);

std::string format_mult(const Mult& m);
std::string format_seq_ext(const Seq& ext);  // inner-first extended sequence, display order

}  // namespace tcat
