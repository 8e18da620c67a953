#include "doctest.h"

#include "polybound/oracle.hpp"
#include "polybound/sturm.hpp"
#include "test_util.hpp"

using namespace polybound;

namespace {

QPoly qmk(const RegistryPtr& reg, std::vector<std::pair<std::vector<int>, Rat>> terms) {
    QPoly p(reg);
    for (auto& [es, c] : terms) {
        Monomial m(reg->size());
        for (std::size_t i = 0; i < es.size(); ++i) m.e[i] = es[i];
        p.add_term(m, c);
    }
    return p;
}

UPoly up(std::vector<long> cs) {
    std::vector<FElem> fs;
    for (long c : cs) fs.emplace_back(c);
    return UPoly(std::move(fs));
}

UPoly random_squarefree(testutil::Rng& rng, int maxdeg) {
    for (;;) {
        int d = static_cast<int>(rng.range(1, maxdeg));
        std::vector<FElem> cs;
        for (int i = 0; i < d; ++i) cs.emplace_back(rng.range(-9, 9));
        cs.emplace_back(rng.range(1, 9));
        UPoly f{std::move(cs)};
        if (upoly_gcd(f, f.derivative()).degree() == 0) return f;
    }
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("sampling plan validation") {
    auto reg = make_registry({"x1"});
    QPoly x1 = QPoly::variable(reg, 0);
    SamplingPlan plan = SamplingPlan::defaults();
    plan.radii.clear();
    CHECK_THROWS_AS(find_unbounded_witness(x1, plan), Error);
    plan = SamplingPlan::defaults();
    plan.threshold_schedule = {Rat(10), Rat(10)};
    CHECK_THROWS_AS(find_unbounded_witness(x1, plan), Error);
}

TEST_CASE("witnesses for obvious escapes") {
    auto reg1 = make_registry({"x1"});
    QPoly x1 = QPoly::variable(reg1, 0);
    auto w = find_unbounded_witness(x1);
    REQUIRE(w.has_value());
    CHECK(w->second < Rat(-1000000));
    CHECK(x1.eval_full(w->first) == w->second);

    auto reg = make_registry({"x1", "x2"});
    QPoly sum = qmk(reg, {{{2, 0}, 1}, {{0, 2}, 1}});
    CHECK(!find_unbounded_witness(sum).has_value());

    QPoly cube = qmk(reg, {{{3, 0}, 1}});
    auto wc = find_unbounded_witness(cube);
    REQUIRE(wc.has_value());
    CHECK(wc->second < Rat(-1000000));
}

TEST_CASE("witness along the hyperbola valley") {
    auto reg = make_registry({"x1", "x2"});
    QPoly x1 = QPoly::variable(reg, 0), x2 = QPoly::variable(reg, 1);
    QPoly one = QPoly::constant(reg, Rat(1));
    QPoly qx = (x1 * x2 - one) * (x1 * x2 - one) + x2 * x2 + x1;
    auto w = find_unbounded_witness(qx);
    REQUIRE(w.has_value());
    CHECK(w->second < Rat(-100));
    CHECK(qx.eval_full(w->first) == w->second);
}

TEST_CASE("univariate parity oracle") {
    auto reg = make_registry({"x1", "x2"});
    CHECK(!univariate_lower_bounded(qmk(reg, {{{3, 0}, 1}})));
    CHECK(!univariate_lower_bounded(qmk(reg, {{{2, 0}, -1}})));
    CHECK(univariate_lower_bounded(qmk(reg, {{{4, 0}, 1}, {{1, 0}, -100}})));
    CHECK(univariate_lower_bounded(qmk(reg, {{{0, 0}, -5}})));
    CHECK(univariate_lower_bounded(QPoly(reg)));
    CHECK(univariate_lower_bounded(qmk(reg, {{{0, 2}, 3}, {{0, 1}, -7}})));
    CHECK_THROWS_AS(univariate_lower_bounded(qmk(reg, {{{1, 1}, 1}})), MultivariateInput);
    CHECK_THROWS_AS(univariate_lower_bounded(qmk(reg, {{{1, 0}, 1}, {{0, 1}, 1}})),
                    MultivariateInput);
}

TEST_CASE("naive root counts on pinned polynomials") {
    CHECK(naive_real_root_count(up({-1, 0, 1}), Rat(-2), Rat(2)) == 2);
    CHECK(naive_real_root_count(up({0, -1, 0, 1}), Rat(-2), Rat(2)) == 3);
    // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    CHECK(naive_real_root_count(up({-6, 11, -6, 1}), Rat(0), Rat(10)) == 3);
    CHECK(naive_real_root_count(up({-6, 11, -6, 1}), Rat(0), rat(3, 2)) == 1);
    CHECK(naive_real_root_count(up({1, 0, 1}), Rat(-5), Rat(5)) == 0);

    CHECK_THROWS_AS(naive_real_root_count(up({0, 0, 1}), Rat(-1), Rat(1)), NotSquareFree);
    CHECK_THROWS_AS(naive_real_root_count(up({-1, 0, 1}), Rat(1), Rat(3)), EndpointIsRoot);
    CHECK_THROWS_AS(naive_real_root_count(up({-1, 0, 1}), Rat(-3), Rat(1)), EndpointIsRoot);
    CHECK_THROWS_AS(naive_real_root_count(UPoly(), Rat(0), Rat(1)), ZeroPolynomial);
    CHECK_THROWS_AS(naive_real_root_count(up({1, 1}), Rat(2), Rat(1)), Error);
    UPoly with_pi{std::vector<FElem>{FElem::pi(), FElem(1)}};
    CHECK_THROWS_AS(naive_real_root_count(with_pi, Rat(0), Rat(1)), Error);
}

TEST_CASE("naive count agrees with the sturm count") {
    testutil::Rng rng(2024);
    int done = 0;
    while (done < 100) {
        UPoly f = random_squarefree(rng, 6);
        Rat lo = Rat(-10) + testutil::random_rat(rng);
        Rat hi = Rat(10) + testutil::random_rat(rng);
        // nudge away from the rare root endpoint
        while (f.eval(FElem(PiPoly(lo))).is_zero()) lo -= rat(1, 7);
        while (f.eval(FElem(PiPoly(hi))).is_zero()) hi += rat(1, 7);
        int naive = naive_real_root_count(f, lo, hi);
        int sturm = count_roots_interval(f, EvalPoint::finite(FElem(PiPoly(lo))),
                                         EvalPoint::finite(FElem(PiPoly(hi))));
        CHECK(naive == sturm);
        ++done;
    }
}

} // TEST_SUITE
