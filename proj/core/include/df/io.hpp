#pragma once

#include <iosfwd>
#include <string>

#include "df/coxeter.hpp"
#include "df/finite_group.hpp"
#include "df/integer_matrix.hpp"
#include "df/simplicial_complex.hpp"

namespace df {

/// One facet per line, whitespace-separated labels, `#` starts a comment line.
/// Errors carry the source name and line number.
SimplicialComplex parse_complex(std::istream& in, const std::string& source = "<input>");
SimplicialComplex read_complex(const std::string& path);
/// Emits facets in a format `parse_complex` reads back to the same simplex set.
std::string emit_complex(const SimplicialComplex& k);

/// Order n, then n rows of n 0-based product indices.
FiniteGroup parse_group_table(std::istream& in, const std::string& source = "<input>");
FiniteGroup read_group_table(const std::string& path);

/// `rows cols`, then row-major integers.
IntegerMatrix parse_matrix(std::istream& in, const std::string& source = "<input>");
IntegerMatrix read_matrix(const std::string& path);

/// First line: generator labels. Every further line: a commuting pair.
CoxeterSystem parse_coxeter_system(std::istream& in, const std::string& source = "<input>");

}  // namespace df
