#pragma once

// Text forms accepted on the command line.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "comaj/perm.hpp"

namespace comaj {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "3651274" (n <= 9) or "3,6,5,1,2,7,4".
Permutation parse_permutation(std::string_view text);

/// Digit strings separated by ',' ("3651274,6523417"), or comma lists
/// separated by ';' ("10,1,2,...;1,2,..."). Empty text is an empty list.
std::vector<Permutation> parse_permutation_list(std::string_view text);

/// "4,2,1".
Partition parse_partition(std::string_view text);

/// "2,5,6", "{2,5,6}", "" or "{}", checked against {1..n-1}.
DescentSet parse_descent_set(std::string_view text, int n);

/// Rows bottom to top separated by '/', entries by ',': "1,2,4,5/3,6/7".
StandardTableau parse_tableau(std::string_view text);

}  // namespace comaj
