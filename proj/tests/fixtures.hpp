#pragma once

// Shared constructions for tests that predate the instance presets: the
// su(2)+R base algebra and its Courant double g_ell.

#include <memory>

#include "sva/ceforms.hpp"
#include "sva/qla.hpp"

namespace fixtures {

using namespace sva;

inline Field symbolic_field() {
    Field f;
    f = f.with_parameter("l").with_parameter("x").with_parameter("a").with_parameter("k");
    return f;
}

// su(2) + R with [v2,v3] = -v1, [v3,v1] = -v2, [v1,v2] = -v3, v4 central
inline LiePtr su2_u1(const Field& f) {
    LieData lie = LieData::Builder(f, {"v1", "v2", "v3", "v4"})
                      .set("v2", "v3", {{"v1", "-1"}})
                      .set("v3", "v1", {{"v2", "-1"}})
                      .set("v1", "v2", {{"v3", "-1"}})
                      .build();
    return std::make_shared<LieData>(std::move(lie));
}

inline InvariantForm h_ell(const LiePtr& base, const Scalar& ell) {
    return InvariantForm::monomial(base, {0, 1, 2}, ell);
}

inline AlgebraPtr g_ell(const Field& f) {
    LiePtr base = su2_u1(f);
    return courant_double(*base, h_ell(base, f.var("l")));
}

// V+^{x,a} = span{ v_i + g(v_i) } for the bi-invariant metric g_{x,a}
inline Subspace vplus_xa(const AlgebraPtr& g) {
    const Field& f = g->field();
    Scalar ax = f.parse("a/x");
    std::vector<Vec> rows;
    for (size_t i = 0; i < 3; ++i) {
        std::vector<Scalar> c(8, f.of(0));
        c[i] = f.of(1);
        c[4 + i] = ax;
        rows.push_back(g->vec(std::move(c)));
    }
    std::vector<Scalar> c(8, f.of(0));
    c[3] = f.of(1);
    c[7] = f.parse("a*x");
    rows.push_back(g->vec(std::move(c)));
    return g->span(rows);
}

} // namespace fixtures
