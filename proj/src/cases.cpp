#include "loophom/cases.hpp"

namespace loophom {

std::string case_name(CatalogCase c) {
    switch (c) {
    case CatalogCase::SuOdd: return "SU_odd";
    case CatalogCase::SuEven: return "SU_even";
    case CatalogCase::SoEven: return "SO_even";
    case CatalogCase::So8: return "SO8";
    case CatalogCase::E6T4: return "E6T4";
    case CatalogCase::APartial: return "A_partial";
    }
    return "";
}

std::optional<CatalogCase> parse_case_name(std::string_view name) {
    if (name == "SU_odd") return CatalogCase::SuOdd;
    if (name == "SU_even") return CatalogCase::SuEven;
    if (name == "SO_even") return CatalogCase::SoEven;
    if (name == "SO8") return CatalogCase::So8;
    if (name == "E6T4") return CatalogCase::E6T4;
    if (name == "A_partial") return CatalogCase::APartial;
    return std::nullopt;
}

void validate_params(CatalogCase c, const CatalogParams& p) {
    switch (c) {
    case CatalogCase::SuOdd:
    case CatalogCase::SuEven:
    case CatalogCase::SoEven:
        if (p.n < 1)
            throw ParameterError(case_name(c) + " needs n >= 1");
        return;
    case CatalogCase::So8:
    case CatalogCase::E6T4:
        return;
    case CatalogCase::APartial:
        if (p.n < 2 || p.k < 0)
            throw ParameterError("A_partial needs n >= 2 and k >= 0");
        if (p.k > p.n - 2)
            throw ParameterError("A_partial is out of family for k > n-2");
        return;
    }
}

bool degenerate_params(CatalogCase c, const CatalogParams& p) {
    return (c == CatalogCase::SuEven || c == CatalogCase::SoEven) && p.n == 1;
}

std::string case_label(CatalogCase c, const CatalogParams& p) {
    switch (c) {
    case CatalogCase::SuOdd:
    case CatalogCase::SuEven:
    case CatalogCase::SoEven:
        return case_name(c) + " n=" + std::to_string(p.n);
    case CatalogCase::So8:
    case CatalogCase::E6T4:
        return case_name(c);
    case CatalogCase::APartial:
        return case_name(c) + " n=" + std::to_string(p.n) + " k=" + std::to_string(p.k);
    }
    return "";
}

} // namespace loophom
