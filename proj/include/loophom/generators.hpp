#pragma once

#include "loophom/errors.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace loophom {

// A named generator with its topological degree.  Parity is derived:
// even degree commutes (polynomial), odd degree anticommutes (exterior).
struct GradedGenerator {
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
    bool even() const { return degree % 2 == 0; }

    friend bool operator==(const GradedGenerator& a, const GradedGenerator& b) {
        return a.name == b.name && a.degree == b.degree;
    }
};

// Ordered list of commuting (even-degree) generators.  Declaration order is
// the tie-break of every monomial order, so it is part of the value.
class PolyContext {
public:
    explicit PolyContext(std::vector<GradedGenerator> gens) : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (g.degree < 1)
                throw GradingError("generator '" + g.name + "' must have degree >= 1");
            if (g.odd())
                throw GradingError("polynomial generator '" + g.name + "' must have even degree");
            if (!index_.emplace(g.name, i).second)
                throw SemanticError("duplicate generator name '" + g.name + "'");
        }
    }

    std::size_t size() const { return gens_.size(); }
    const GradedGenerator& gen(std::size_t i) const { return gens_[i]; }
    const std::vector<GradedGenerator>& gens() const { return gens_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    friend bool operator==(const PolyContext& a, const PolyContext& b) {
        return a.gens_ == b.gens_;
    }

private:
    std::vector<GradedGenerator> gens_;
    std::unordered_map<std::string, std::size_t> index_;
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

inline PolyContextPtr make_context(std::vector<GradedGenerator> gens) {
    return std::make_shared<const PolyContext>(std::move(gens));
}

inline bool same_context(const PolyContextPtr& a, const PolyContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace loophom
