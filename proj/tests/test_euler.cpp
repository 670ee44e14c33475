#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/euler.hpp"
#include "strata/gallery.hpp"

using namespace strata;
using Std = Perversity::Standard;

namespace {

const char* kChainSpaces[] = {"point",         "circle",     "sphere2",
                              "torus2",        "pinched_torus", "susp_torus2",
                              "torus3_2p",     "susp_torus3_2p"};

} // namespace

TEST_CASE("chi_c_constructible: closed form") {
    CHECK(chi_c_constructible({}) == 0);
    CHECK(chi_c_constructible({{7, 3}}) == 21);
    // pinched torus IC data at zero perversity: regular (0,1), point (1,2)
    CHECK(chi_c_constructible({{0, 1}, {1, 2}}) == 2);
}

TEST_CASE("paper values: direct I-chi") {
    CHECK(ichi_c_direct(gallery("pinched_torus"), Perversity::standard(Std::Zero, 2)) == 2);
    CHECK(ichi_c_direct(gallery("susp_torus2"), Perversity::standard(Std::Top, 3)) == 2);
    CHECK(ichi_c_direct(gallery("susp_torus2"), Perversity::standard(Std::Zero, 3)) == -2);
    for (const Perversity& p : standard_perversities(4))
        CHECK(ichi_c_direct(gallery("susp_torus3_2p"), p) == 0);
}

TEST_CASE("stratumwise I-chi: paper example breakdown on the suspended torus") {
    StratifiedSpace s = gallery("susp_torus2");
    StratumwiseResult r = ichi_c_stratumwise(s, Perversity::standard(Std::Top, 3));
    CHECK(r.total == 2);
    // each pole contributes (-1)^3 * 1 * (1 - 2) = 1; the regular part 0
    std::int64_t pole_contrib = 0;
    for (const auto& t : r.terms) {
        if (t.dim == 0) {
            CHECK(t.chi_c == 1);
            CHECK(t.link_sum == -1);
            CHECK(t.contribution == 1);
            pole_contrib += t.contribution;
        } else {
            CHECK(t.contribution == 0);
        }
    }
    CHECK(pole_contrib == 2);
}

TEST_CASE("theorem-level identity: stratumwise equals direct everywhere") {
    for (const char* name : kChainSpaces) {
        StratifiedSpace s = gallery(name);
        IntersectionEngine engine(s);
        for (const Perversity& p : standard_perversities(s.n())) {
            INFO(name << " @ " << p.display_name());
            CHECK(ichi_c_stratumwise(s, p).total == ichi_c_direct(engine, p));
        }
    }
}

TEST_CASE("constructible-sheaf route agrees: sum chi_c * stalk-chi times (-1)^n") {
    for (const char* name : kChainSpaces) {
        StratifiedSpace s = gallery(name);
        const int n = s.n();
        IntersectionEngine engine(s);
        for (const Perversity& p : standard_perversities(n)) {
            std::vector<ConstructibleDatum> data;
            for (const StratumComponent& comp : stratum_components(s)) {
                ConstructibleDatum d;
                d.chi_c = comp.chi_c;
                if (comp.dim == n) {
                    d.stalk_chi = 1; // constant-rank stalk at regular points
                } else {
                    StratifiedSpace link = normal_link(s, comp);
                    auto link_ih = ih_dims(link, p.truncated(link.n())).dims;
                    auto stalk = stalk_cohomology(link_ih, n, comp.dim, p);
                    std::int64_t chi = 0;
                    for (std::size_t i = 0; i < stalk.size(); ++i)
                        chi += (i % 2 == 0 ? 1 : -1) * stalk[i];
                    d.stalk_chi = chi;
                }
                data.push_back(d);
            }
            const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
            INFO(name << " @ " << p.display_name());
            CHECK(sign * chi_c_constructible(data) == ichi_c_direct(engine, p));
        }
    }
}

TEST_CASE("single-stratum spaces: I-chi is the euler characteristic") {
    for (const char* name : {"point", "circle", "sphere2", "torus2"}) {
        StratifiedSpace s = gallery(name);
        for (const Perversity& p : standard_perversities(s.n()))
            CHECK(ichi_c_direct(s, p) == s.complex().euler_characteristic());
    }
}

TEST_CASE("middle-perversity even formula") {
    CHECK(ichi_middle_even(gallery("sphere2")) == 2);
    CHECK(ichi_middle_even(gallery("pinched_torus")) == 2);
    CHECK_THROWS_WITH_AS(ichi_middle_even(gallery("susp_torus2")),
                         doctest::Contains("even"), InputError);
    // odd-dimensional stratum inside an even-dimensional space
    CHECK_THROWS_WITH_AS(ichi_middle_even(gallery("susp_torus3_2p")),
                         doctest::Contains("odd"), InputError);
    // agreement with the stratumwise lower-middle evaluation
    for (const char* name : {"sphere2", "torus2", "pinched_torus"}) {
        StratifiedSpace s = gallery(name);
        CHECK(ichi_middle_even(s) ==
              ichi_c_stratumwise(s, Perversity::standard(Std::LowerMiddle, s.n())).total);
    }
}

TEST_CASE("stratumwise works on the 6-dimensional product without chain-level IH") {
    StratifiedSpace prod = gallery("susp_torus3_2p_x_sphere2");
    for (const Perversity& p : standard_perversities(6)) {
        INFO(p.display_name());
        CHECK(ichi_c_stratumwise(prod, p).total == 0);
    }
}
