#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finitop/finspace.hpp"

namespace finitop::dsl {

/// A parsed `.space` document. The format is line-oriented:
///
///   # comment
///   space <name>            (optional)
///   points <n>              (required unless catalog)
///   open {0,1}              explicit open sets, or
///   subbase {0,2}           subbase generators, or
///   preorder 0<=1           specialization pairs (0 in closure of {1}), or
///   catalog <family-name>   a symbolic catalog reference
///
/// Construction styles cannot be mixed. Parsing canonicalizes the payload
/// (sets and pairs sorted, duplicates dropped) so parse/emit/parse is the
/// identity on the payload.
struct SpaceDoc {
    enum class Style { Opens, Subbase, Preorder, Catalog };

    std::string name = "unnamed";
    Style style = Style::Opens;
    int points = -1;
    std::vector<PointSet> sets;                   // Opens / Subbase
    std::vector<std::pair<int, int>> preorder;    // lo <= hi
    std::string catalog_name;

    bool is_catalog() const { return style == Style::Catalog; }
    bool operator==(const SpaceDoc&) const = default;
};

/// Throws SyntaxError / SemanticError with 1-based line and column.
SpaceDoc parse_space(std::string_view text);

std::string emit_space(const SpaceDoc& doc);

/// Builds the finite space a non-catalog document describes.
FinSpace realize_finite(const SpaceDoc& doc);

/// Explicit-opens document for an existing space (witness output).
SpaceDoc doc_for_space(const FinSpace& space, std::string name);

}  // namespace finitop::dsl
