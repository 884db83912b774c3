#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srcdec/groebner.hpp"
#include "srcdec/triset.hpp"

namespace srcdec {

/// A parsed polynomial system file.
///
///     # name: ex5_1
///     # expected_pairs: 3
///     vars: u < v < x < y
///     u*x*y
///     v*y^2 + y
///     v*x^2 + y^2
struct SystemFile {
    OrderingPtr ordering;
    IdealGens gens{nullptr};
    std::string name;
    std::optional<std::size_t> expected_pairs;
    /// Every `# key: value` comment line, including name and expected_pairs.
    std::map<std::string, std::string> metadata;
    /// Non-fatal findings, such as generators that simplified to zero.
    std::vector<std::string> warnings;
};

/// ParseError on a missing or repeated `vars:` line, a polynomial before
/// it, an unknown variable, a malformed token, or a file with no
/// polynomial lines. Zero generators are dropped with a warning.
SystemFile parse_system(std::string_view text);

SystemFile load_system(const std::filesystem::path& path);

/// Parses one polynomial over `ordering`; positions refer to `line`.
Polynomial parse_polynomial(std::string_view text, const OrderingPtr& ordering,
                            std::size_t line = 1);

/// Parses `a < b < c` (the part after `vars:`).
OrderingPtr parse_ordering(std::string_view text, std::size_t line = 1);

/// Rewrites p over `target` matching variables by name. DomainError when a
/// variable occurring in p is missing from `target`.
Polynomial remap(const Polynomial& p, const OrderingPtr& target);

/// The same system over another ordering of (a superset of) its variables.
SystemFile with_ordering(const SystemFile& sys, const OrderingPtr& target);

/// `vars:` line followed by one polynomial per line; parse_system reads it
/// back to an equal system.
std::string render_system(const OrderingPtr& ordering, const std::vector<Polynomial>& polys);

/// Polynomial with integer coefficients: p scaled to its primitive form.
std::string to_string_cleared(const Polynomial& p);

}  // namespace srcdec
