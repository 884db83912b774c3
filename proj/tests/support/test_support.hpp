#pragma once

#include <algorithm>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "srcdec/groebner.hpp"
#include "srcdec/system_io.hpp"
#include "srcdec/triset.hpp"

namespace srcdec::testing {

/// Parses polynomials over a fixed ordering: Ring r("x < y"); r("x^2 - y").
class Ring {
public:
    explicit Ring(std::string_view vars) : ord_(parse_ordering(vars)) {}

    const OrderingPtr& ordering() const { return ord_; }

    Polynomial operator()(std::string_view text) const { return parse_polynomial(text, ord_); }

    std::vector<Polynomial> polys(std::initializer_list<std::string_view> texts) const {
        std::vector<Polynomial> out;
        for (auto t : texts) out.push_back((*this)(t));
        return out;
    }

    IdealGens ideal(std::initializer_list<std::string_view> texts) const {
        return IdealGens(ord_, polys(texts));
    }

    ReducedGB gb(std::initializer_list<std::string_view> texts) const {
        return groebner_basis(ideal(texts));
    }

    TriangularSet triset(std::initializer_list<std::string_view> texts) const {
        return TriangularSet(ord_, polys(texts));
    }

    /// Monic polynomials sorted ascending by leading term, the layout a
    /// ReducedGB stores.
    std::vector<Polynomial> basis(std::initializer_list<std::string_view> texts) const {
        std::vector<Polynomial> out;
        for (auto t : texts) out.push_back((*this)(t).monic());
        std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
            return a.leading_monomial() < b.leading_monomial();
        });
        return out;
    }

private:
    OrderingPtr ord_;
};

inline std::vector<std::string> rendered(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

inline std::vector<std::string> rendered(const ReducedGB& g) { return rendered(g.basis()); }

inline std::vector<std::string> rendered(const TriangularSet& t) {
    if (t.is_trivial()) return {"1"};
    return rendered(t.polys());
}

inline std::filesystem::path corpus_path(std::string_view file) {
    return std::filesystem::path(SRCDEC_TEST_CORPUS) / std::string(file);
}

}  // namespace srcdec::testing
