#include "liequiv/catalog.hpp"

#include "liequiv/errors.hpp"

namespace liequiv {

namespace {

void expect_count(const std::string& name, std::span<const Rational> params, std::size_t count) {
    if (params.size() != count)
        throw InvalidArgument("catalog '" + name + "' expects " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
}

LieAlgebra with_brackets(std::size_t n, std::string name,
                         std::initializer_list<std::pair<std::pair<int, int>, int>> unit_brackets) {
    LieAlgebra alg(n, std::move(name));
    for (const auto& [pair, target] : unit_brackets)
        alg.set_bracket(static_cast<std::size_t>(pair.first), static_cast<std::size_t>(pair.second),
                        basis_vector(n, static_cast<std::size_t>(target)));
    return alg;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"so3", "alpha1 alpha2 alpha3 (all nonzero)",
         "so(3) = Lie algebra of S^3; [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; metric diag(alpha)"},
        {"g4", "alpha (> 0)",
         "3-step nilpotent G4; [e1,e2]=e3, [e1,e3]=e4; Lorentz metric with g(e1,e4)=1, "
         "g(e2,e2)=1, g(e3,e3)=alpha"},
        {"rh3xr", "alpha (> 0) beta (0 <= beta < 1)",
         "RH^3 x R+; [e1,e3]=e1, [e2,e3]=e2; Riemannian metric with g(e3,e3)=alpha, "
         "g(e1,e4)=beta"},
        {"heisenberg3", "(none)", "Heisenberg algebra; [e1,e2]=e3; identity metric"},
        {"abelian", "n (>= 1)", "abelian algebra of dimension n; identity metric"},
    };
    return entries;
}

std::pair<LieAlgebra, MetricMatrix> catalog(const std::string& name,
                                            std::span<const Rational> params) {
    if (name == "so3") {
        expect_count(name, params, 3);
        for (const auto& a : params)
            if (a == 0) throw InvalidArgument("so3: every alpha must be nonzero");
        LieAlgebra alg = with_brackets(3, "so3", {{{0, 1}, 2}, {{1, 2}, 0}, {{2, 0}, 1}});
        return {std::move(alg), MetricMatrix(Matrix::diagonal(params))};
    }
    if (name == "g4") {
        expect_count(name, params, 1);
        if (params[0] <= 0) throw InvalidArgument("g4: alpha must be positive");
        LieAlgebra alg = with_brackets(4, "g4", {{{0, 1}, 2}, {{0, 2}, 3}});
        Matrix s(4, 4);
        s(0, 3) = 1;
        s(3, 0) = 1;
        s(1, 1) = 1;
        s(2, 2) = params[0];
        return {std::move(alg), MetricMatrix(std::move(s))};
    }
    if (name == "rh3xr") {
        expect_count(name, params, 2);
        if (params[0] <= 0) throw InvalidArgument("rh3xr: alpha must be positive");
        if (params[1] < 0 || params[1] >= 1)
            throw InvalidArgument("rh3xr: beta must satisfy 0 <= beta < 1");
        LieAlgebra alg = with_brackets(4, "rh3xr", {{{0, 2}, 0}, {{1, 2}, 1}});
        Matrix s = Matrix::identity(4);
        s(2, 2) = params[0];
        s(0, 3) = params[1];
        s(3, 0) = params[1];
        return {std::move(alg), MetricMatrix(std::move(s))};
    }
    if (name == "heisenberg3") {
        expect_count(name, params, 0);
        return {with_brackets(3, "heisenberg3", {{{0, 1}, 2}}), MetricMatrix(Matrix::identity(3))};
    }
    if (name == "abelian") {
        expect_count(name, params, 1);
        const Rational& n = params[0];
        if (n.get_den() != 1 || n < 1 || n > 64)
            throw InvalidArgument("abelian: n must be an integer in [1, 64]");
        const auto dim = static_cast<std::size_t>(n.get_num().get_ui());
        return {LieAlgebra(dim, "abelian"), MetricMatrix(Matrix::identity(dim))};
    }
    throw InvalidArgument("unknown catalog entry '" + name + "'");
}

}  // namespace liequiv
