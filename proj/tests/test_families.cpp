#include "delpezzo/families.hpp"
#include "delpezzo/poly_parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace delpezzo;

namespace {
const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> XYZT{"x", "y", "z", "t"};
const std::vector<std::string> XYZTU{"x", "y", "z", "t", "u"};
}  // namespace

TEST_CASE("family catalog") {
    const auto& table = family_catalog();
    REQUIRE(table.size() == 6);
    CHECK(family_info(FamilyId::G2_P1123).weights == std::vector<int>{1, 1, 2, 3});
    CHECK(family_info(FamilyId::G2_P1123).k_square == 1);
    CHECK(family_info(FamilyId::G4_CI_P11112).degrees == std::vector<long>{2, 3});
    CHECK(family_info(FamilyId::G4_CI_P11112).k_square == 3);
    CHECK(family_info(FamilyId::G6C_P1114).k_square == 5);
    CHECK(family_info(FamilyId::HIGHER_CONE).g == 10);
    for (const auto& f : table) CHECK(f.g == f.k_square + 1);
}

TEST_CASE("symmetry detection and unfolding") {
    WeightedSpace p1123({1, 1, 2, 3});
    WeightedForm F(p1123, parse_polynomial("t^2 - z^3 - x^6 + x*y^5", XYZT), 6);
    CHECK(detect_symmetry(F, "t") == Parity::Even);
    WeightedForm unfolded = desymmetrize(F, "t", "u");
    CHECK(unfolded.space.weights == std::vector<int>{1, 1, 2, 6});
    CHECK(unfolded.poly == parse_polynomial("u - z^3 - x^6 + x*y^5", {"x", "y", "z", "u"}));
    CHECK(unfolded.degree == 6);

    CHECK(detect_symmetry(parse_polynomial("x^5 + t", XYZT), 3) == Parity::Mixed);
    CHECK(detect_symmetry(parse_polynomial("t^3 + t*x^4", XYZT), 3) == Parity::Odd);
    CHECK_THROWS_AS(desymmetrize(F, "x"), std::invalid_argument);
}

TEST_CASE("verify_g2: fermat sextic passes") {
    auto r = verify_g2(parse_polynomial("z^3 + x^6 + y^6", XYZ));
    CHECK(r.pass);
    CHECK(r.k_square == 1);
    CHECK(r.g == 2);
    CHECK(r.k == 0);
    CHECK(r.index == 1);
    CHECK_FALSE(r.center_type.has_value());
    CHECK(r.duval_config.str() == "∅");
    CHECK(r.complete);
}

TEST_CASE("verify_g2: A5 center gives k=2") {
    auto r = verify_g2(parse_polynomial("x^2*z^2 + y^6 + x^6", XYZ));
    CHECK(r.pass);
    REQUIRE(r.center_type.has_value());
    CHECK(*r.center_type == SingularityType::A(5));
    CHECK(r.k == 2);
    CHECK(r.index == 2);
    REQUIRE(r.index2_type.has_value());
    CHECK(*r.index2_type == SingularityType::K(2));
    CHECK(r.duval_config.str() == "∅");
}

TEST_CASE("verify_g2: A1 center stays index 1") {
    auto r = verify_g2(parse_polynomial("x^2*z^2 - y^2*z^2 + x^6 + y^6", XYZ));
    CHECK(r.pass);
    REQUIRE(r.center_type.has_value());
    CHECK(*r.center_type == SingularityType::A(1));
    CHECK(r.k == 0);
    CHECK(r.index == 1);
}

TEST_CASE("verify_g2: degenerate three-conic input is not reduced") {
    auto r = verify_g2(parse_polynomial("z^3 - 3*x^2*z^2 + 2*x^4*z", XYZ));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition == "sextic is not reduced");
}

TEST_CASE("verify_g2: three tangent conics fail through the classifier") {
    // (z - xy)(z - 2xy)(z - 3xy): conics c^2 = t*ab pairwise tangent at
    // (1:0:0) and (0:1:0)
    Polynomial G = parse_polynomial("z - x*y", XYZ) * parse_polynomial("z - 2*x*y", XYZ) *
                   parse_polynomial("z - 3*x*y", XYZ);
    auto r = verify_g2(G);
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition.find("non-simple singularity") != std::string::npos);
}

TEST_CASE("verify_g2: simple singularity on the symmetry line is rejected") {
    // node at (1:0:0), which lies on {c=0}
    auto r = verify_g2(parse_polynomial("x^4*y^2 + x^4*z + y^6 + z^3", XYZ));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition.find("symmetry line") != std::string::npos);
}

TEST_CASE("verify_g2: wrong degree") {
    auto r = verify_g2(parse_polynomial("z^2 + x^4", XYZ));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition.find("weighted degree 6") != std::string::npos);
}

TEST_CASE("verify_g3a: smooth octic passes with two K1 points") {
    auto r = verify_g3a(parse_polynomial("z^2 + x^8 + y^8", XYZ));
    CHECK(r.pass);
    CHECK(r.k_square == 2);
    CHECK(r.g == 3);
    CHECK(r.k == 2);
    CHECK(r.index == 2);
    CHECK(r.index2_point_count == 2);
    REQUIRE(r.index2_type.has_value());
    CHECK(*r.index2_type == SingularityType::K(1));
    CHECK(r.duval_config.str() == "∅");
}

TEST_CASE("verify_g3a: vertex avoidance") {
    auto r = verify_g3a(parse_polynomial("z*x^4 + y^8", XYZ));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition.find("vertex") != std::string::npos);
}

TEST_CASE("verify_g3a: planted node pair reports 2A_1") {
    // (z - x^4)^2 + x^6 y^2 + y^8: nodes exactly at (1:0:1) and (1:0:-1)
    Polynomial G = parse_polynomial("z^2 - 2*x^4*z + x^8 + x^6*y^2 + y^8", XYZ);
    auto r = verify_g3a(G);
    CHECK(r.pass);
    CHECK(r.duval_config.str() == "2A_1");
    CHECK(r.duval_config_orbits.str() == "A_1");
    REQUIRE(r.points.size() == 2);
    for (const auto& p : r.points) CHECK(p.type == SingularityType::A(1));
}

TEST_CASE("verify_g3b: fermat quartic passes at index 1") {
    auto r = verify_g3b(parse_polynomial("x^4 + y^4 + z^4 + t^2", XYZT));
    CHECK(r.pass);
    CHECK(r.k_square == 2);
    CHECK(r.g == 3);
    CHECK(r.index == 1);
    CHECK(r.k == 0);
    CHECK(r.duval_config.str() == "∅");
    CHECK(r.complete);
}

TEST_CASE("verify_g3b: engineered A3 center gives K(1)") {
    // quartic d^2*ab + a^4 + b^4 + c^4 has an A3 germ at (0:0:0:1)
    auto r = verify_g3b(parse_polynomial("t*x*y + x^4 + y^4 + z^4", XYZT));
    CHECK(r.pass);
    REQUIRE(r.center_type.has_value());
    CHECK(*r.center_type == SingularityType::A(3));
    CHECK(r.k == 1);
    CHECK(r.index == 2);
    REQUIRE(r.index2_type.has_value());
    CHECK(*r.index2_type == SingularityType::K(1));
}

TEST_CASE("verify_g3b: off-center node pair") {
    // (d^2 - a^2)^2 + a^2 b^2 + a^2 c^2 + b^4 + c^4: A1 at (1:0:0:±1)
    Polynomial F = parse_polynomial("t^2 - 2*t*x^2 + x^4 + x^2*y^2 + x^2*z^2 + y^4 + z^4", XYZT);
    auto r = verify_g3b(F);
    CHECK(r.pass);
    CHECK(r.index == 1);
    CHECK(r.k == 0);
    CHECK(r.duval_config.str() == "2A_1");
    CHECK(r.duval_config_orbits.str() == "A_1");
}

TEST_CASE("verify_g4: smooth quadric gives the cubic surface branch") {
    Polynomial F = parse_polynomial("u - x^2 - y^2 - z^2 - t^2", XYZTU);
    Polynomial G = parse_polynomial("u*x + x^3 + y^3 + z^3 + t^3", XYZTU);
    auto r = verify_g4(F, G);
    CHECK(r.pass);
    CHECK(r.k_square == 3);
    CHECK(r.g == 4);
    CHECK(r.index == 1);
    CHECK(r.k == 0);
    bool has_rank5 = false, has_cubic = false;
    for (const auto& n : r.notes) {
        if (n.find("rank 5") != std::string::npos) has_rank5 = true;
        if (n.find("cubic surface") != std::string::npos) has_cubic = true;
    }
    CHECK(has_rank5);
    CHECK(has_cubic);
}

TEST_CASE("verify_g4: singular quadric with A3 center gives index 2") {
    Polynomial F = parse_polynomial("x^2 + y^2 + z*t", XYZTU);
    Polynomial G = parse_polynomial("u*z + x^3 + y^3 + z^3 + t^3", XYZTU);
    auto r = verify_g4(F, G);
    CHECK(r.pass);
    CHECK(r.index == 2);
    REQUIRE(r.center_type.has_value());
    CHECK(*r.center_type == SingularityType::A(3));
    CHECK(r.k == 1);
    REQUIRE(r.index2_type.has_value());
    CHECK(*r.index2_type == SingularityType::K(1));
    bool has_rank4 = false;
    for (const auto& n : r.notes)
        if (n.find("rank 4") != std::string::npos) has_rank4 = true;
    CHECK(has_rank4);
}

TEST_CASE("verify_g4: shared component fails") {
    Polynomial F = parse_polynomial("u - x^2", XYZTU);
    Polynomial G = parse_polynomial("u*x - x^3", XYZTU);
    auto r = verify_g4(F, G);
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition.find("share a component") != std::string::npos);
}

TEST_CASE("verify_g4: wrong degrees fail") {
    auto r = verify_g4(parse_polynomial("u*x", XYZTU), parse_polynomial("u*x", XYZTU));
    CHECK_FALSE(r.pass);
}

TEST_CASE("verify_quintic: fermat-like quintic passes") {
    auto r = verify_quintic(parse_polynomial("t*x + x^5 + y^5 + z^5", XYZT));
    CHECK(r.pass);
    CHECK(r.k_square == 5);
    CHECK(r.g == 6);
    CHECK(r.k == 1);
    CHECK(r.index == 2);
    REQUIRE(r.index2_type.has_value());
    CHECK(*r.index2_type == SingularityType::K(1));
    CHECK(r.duval_config.str() == "∅");
}

TEST_CASE("verify_quintic: check surface singular away from the vertex fails") {
    // the check surface d^4 a + b^5 + c^5 has a multiplicity-4 point at (1:0:0:0)
    auto r = verify_quintic(parse_polynomial("t*x + y^5 + z^5", XYZT));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition.find("non-ADE") != std::string::npos);
    CHECK(r.failed_condition.find("(1:0:0:0)") != std::string::npos);
}

TEST_CASE("verify_quintic: singular at the vertex fails") {
    auto r = verify_quintic(parse_polynomial("x^5 + y^5 + z^5 + x^3*y^2", XYZT));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_condition.find("singular at (0:0:0:1)") != std::string::npos);
}

TEST_CASE("verify_quintic: planted A2 pair reports orbit config A_2") {
    Polynomial F5 = parse_polynomial("t*x - x*z^4 + x^2*z^3 + y^3*z^2 + x^5 + y^5", XYZT);
    auto r = verify_quintic(F5);
    CHECK(r.pass);
    CHECK(r.duval_config.str() == "A_2");
    CHECK(r.k == 1);
}

TEST_CASE("reports always satisfy g = k_square + 1") {
    std::vector<FamilyReport> reports{
        verify_g2(parse_polynomial("z^3 + x^6 + y^6", XYZ)),
        verify_g3a(parse_polynomial("z^2 + x^8 + y^8", XYZ)),
        verify_g3b(parse_polynomial("x^4 + y^4 + z^4 + t^2", XYZT)),
        verify_quintic(parse_polynomial("t*x + x^5 + y^5 + z^5", XYZT)),
    };
    for (const auto& r : reports) {
        CHECK(r.g == r.k_square + 1);
        auto inv = k_square(WeightedSpace(family_info(r.family).weights), family_info(r.family).degrees);
        CHECK(inv.k_square == r.k_square);
    }
}
