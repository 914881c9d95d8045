#pragma once

#include "loophom/errors.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace loophom {

// The built-in family of torus quotients plus the partial-flag family.
enum class CatalogCase { SuOdd, SuEven, SoEven, So8, E6T4, APartial };

struct CatalogParams {
    int n = 0;
    int k = 0;
};

std::string case_name(CatalogCase c);
std::optional<CatalogCase> parse_case_name(std::string_view name);

// Throws ParameterError on invalid parameters for the case.
void validate_params(CatalogCase c, const CatalogParams& p);

// SU_even and SO_even at n = 1 are accepted but have empty polynomial
// tensor factors.
bool degenerate_params(CatalogCase c, const CatalogParams& p);

std::string case_label(CatalogCase c, const CatalogParams& p);

} // namespace loophom
