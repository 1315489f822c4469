#include <deque>
#include <random>
#include <set>
#include <unordered_map>

#include "coxeter.hpp"
#include "doctest.h"
#include "matgroup.hpp"

using namespace coxeter;
using exactalg::Alphabet;
using exactalg::LinForm;
using exactalg::SymVec;

namespace {

MLabel M(const char* s) { return MLabel::parse(s); }
LinForm Vf(const char* s) { return LinForm::parse(s, Alphabet::V); }

SymVec image(const GenWord& w, Side side) {
    Alphabet al = side == Side::W ? Alphabet::W : Alphabet::V;
    return exactalg::mat_apply(exactalg::word_to_matrix(w, side), SymVec::identity(al));
}

std::vector<GenWord> all_words(Side side, int maxLen) {
    std::vector<GenWord> out{{}};
    std::vector<GenWord> layer{{}};
    for (int len = 1; len <= maxLen; ++len) {
        std::vector<GenWord> next;
        for (const auto& w : layer)
            for (const auto& g : exactalg::generator_names(side)) {
                GenWord x = w;
                x.push_back(g);
                next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer.swap(next);
    }
    return out;
}

} // namespace

TEST_CASE("label text forms") {
    CHECK(M("+v(0,7)") == MLabel{});
    CHECK(M("-v(1,3)").str() == "-v(1,3)");
    CHECK_THROWS_AS(M("v(3,3)"), std::invalid_argument);
    CHECK_THROWS_AS(M("+w(0,1)"), std::invalid_argument);
    CHECK(JLabel::parse("p11").str() == "p11");
    CHECK(JLabel::parse("n13").str() == "n13");
    CHECK(LLabel::parse("4bar").str() == "4bar");
    CHECK(TLabel::parse("6").str() == "6");
    for (int k = 0; k < 56; ++k) CHECK(MLabel::parse(MLabel::from_index(k).str()).index() == k);
    for (int k = 0; k < 32; ++k) {
        CHECK(JLabel::parse(JLabel::from_index(k).str()).index() == k);
        CHECK(JLabel::from_string(JLabel::from_index(k).signs()).index() == k);
    }
    for (int k = 0; k < 44; ++k) CHECK(TLabel::parse(TLabel::from_index(k).str()).index() == k);
}

TEST_CASE("L action examples") {
    CHECK(act_L("a2", LLabel::parse("2")) == LLabel::parse("3"));
    CHECK(act_L("a1'", LLabel::parse("1")) == LLabel::parse("2bar"));
    CHECK(act_L("a4", LLabel::parse("1")) == LLabel::parse("1"));
}

TEST_CASE("central involution") {
    CHECK(central_involution(M("+v(0,7)")) == M("-v(0,7)"));
    CHECK(central_involution(TLabel::parse("4")) == TLabel::parse("4bar"));
    for (int k = 0; k < 44; ++k) {
        TLabel t = TLabel::from_index(k);
        CHECK(central_involution(central_involution(t)) == t);
        CHECK_FALSE(central_involution(t) == t);
    }
}

TEST_CASE("coset classification examples") {
    CHECK(coset_classify_M(SymVec::identity(Alphabet::W)) == M("+v(0,7)"));
    CHECK(coset_classify_M(exactalg::mat_apply(exactalg::central_Z(), SymVec::identity(Alphabet::W))) == M("-v(0,7)"));
    CHECK(coset_classify_M(image({"s1"}, Side::W)) == M("+v(0,6)"));
    CHECK(coset_classify_J(SymVec::identity(Alphabet::V)).str() == "p0");
    CHECK(classify_J_first(Vf("1+D-F")).str() == "p11");
    CHECK(classify_J_first(Vf("G-B")).str() == "n13");
    CHECK(coset_classify_L(SymVec::identity(Alphabet::V)) == LLabel::parse("4"));
    CHECK_THROWS(classify_J_first(Vf("A+B")));
}

TEST_CASE("label actions match the matrix layer on all words up to length 3") {
    for (const auto& w : all_words(Side::W, 3)) CHECK(coset_classify_M(image(w, Side::W)) == act_M(w, MLabel{}));
    for (const auto& w : all_words(Side::V, 3)) {
        auto v = image(w, Side::V);
        CHECK(coset_classify_J(v) == act_J(w, JLabel{}));
        LLabel l;
        for (const auto& g : w) l = act_L(g, l);
        CHECK(coset_classify_L(v) == l);
    }
}

TEST_CASE("label actions match the matrix layer on random long words") {
    std::mt19937_64 rng(5);
    for (Side side : {Side::W, Side::V}) {
        const auto& names = exactalg::generator_names(side);
        std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
        for (int n = 0; n < 200; ++n) {
            GenWord w;
            for (int k = 0; k < 15; ++k) w.push_back(names[pick(rng)]);
            if (side == Side::W) {
                CHECK(coset_classify_M(image(w, side)) == act_M(w, MLabel{}));
            } else {
                CHECK(coset_classify_J(image(w, side)) == act_J(w, JLabel{}));
            }
        }
    }
}

TEST_CASE("gamma1 examples") {
    auto g = gamma1(M("+v(0,7)"));
    CHECK(g.color == OrbitColor::BlueL);
    CHECK(g.label == TLabel::parse("6"));
    g = gamma1(M("+v(0,1)"));
    CHECK(g.color == OrbitColor::J);
    CHECK(g.label.j.signs() == "++++++");
    CHECK(gamma1(M("-v(0,1)")).label.j.signs() == "------");
    g = gamma1(M("-v(4,6)"));
    CHECK(g.label.str() == "n11");
    CHECK(g.label.j.signs() == "++-+-+");
    CHECK(gamma1(M("-v(1,3)")).label == TLabel::parse("2bar"));
    CHECK(gamma1(M("+v(1,3)")).color == OrbitColor::RedL);
}

TEST_CASE("m_iso") {
    CHECK(m_iso("s1") == "a5");
    CHECK(m_iso("s5") == "a1");
    CHECK(m_iso("s3'") == "a1'");
    CHECK_THROWS(m_iso("s6"));
}

TEST_CASE("Q-orbits") {
    auto o = orbits_Q();
    CHECK(o[0].size() == 12);
    CHECK(o[1].size() == 12);
    CHECK(o[2].size() == 32);
    auto has = [](const std::vector<MLabel>& s, const char* l) { return std::find(s.begin(), s.end(), M(l)) != s.end(); };
    CHECK(has(o[0], "+v(0,2)"));
    CHECK(has(o[1], "-v(0,2)"));
    CHECK(has(o[2], "+v(0,1)"));
    CHECK(has(o[2], "-v(0,1)"));
}

TEST_CASE("equivariance of gamma1") {
    for (const char* g : {"s1", "s2", "s3", "s4", "s5", "s3'"})
        for (int k = 0; k < 56; ++k) {
            MLabel t = MLabel::from_index(k);
            CHECK(gamma1(act_M(g, t)).label == act_T(m_iso(g), gamma1(t).label));
        }
}

TEST_CASE("vij vectors and discrete distance") {
    CHECK(vij_vector(M("+v(0,1)")) == std::array<int, 8>{3, 3, -1, -1, -1, -1, -1, -1});
    CHECK(vij_vector(M("-v(4,7)")) == std::array<int, 8>{1, 1, 1, 1, -3, 1, 1, -3});
    CHECK(dd(M("+v(0,1)"), M("-v(0,1)")) == 6);
    CHECK(dd(M("+v(0,7)"), M("+v(0,6)")) == 2);
    for (int a = 0; a < 56; ++a) {
        MLabel u = MLabel::from_index(a);
        auto v = vij_vector(u), w = vij_vector(central_involution(u));
        for (int k = 0; k < 8; ++k) CHECK(v[k] == -w[k]);
        CHECK(dd(u, u) == 0);
        for (int b = 0; b < 56; ++b) {
            MLabel x = MLabel::from_index(b);
            CHECK(dd(u, x) == dd(x, u));
            CHECK(dd(u, x) + dd(u, central_involution(x)) == 6);
            CHECK(dd(u, x) == dd_case_table(u, x));
        }
    }
}

TEST_CASE("entry 1 versus entry 2 of vij tracks the color") {
    for (int k = 0; k < 56; ++k) {
        MLabel t = MLabel::from_index(k);
        auto v = vij_vector(t);
        switch (gamma1(t).color) {
        case OrbitColor::BlueL: CHECK(v[0] > v[1]); break;
        case OrbitColor::RedL: CHECK(v[0] < v[1]); break;
        case OrbitColor::J: CHECK(v[0] == v[1]); break;
        }
    }
}

TEST_CASE("t-distance examples") {
    CHECK(t_distance(TLabel::parse("p0"), TLabel::parse("n0")) == 6);
    CHECK(t_distance(TLabel::parse("4"), TLabel::parse("4bar")) == 4);
    for (int k = 0; k < 44; ++k) CHECK(t_distance(TLabel::from_index(k), TLabel::from_index(k)) == 0);
    for (int a = 0; a < 32; ++a)
        for (int b = 0; b < 32; ++b)
            CHECK(t_distance(TLabel::of(JLabel::from_index(a)), TLabel::of(JLabel::from_index(b))) ==
                  hamming(JLabel::from_index(a), JLabel::from_index(b)));
}

// Opposite cosets, tested on group elements: G_L h and G_J h' are opposite
// when some element of the first is Z1 times an element of the second.
TEST_CASE("L-J distances agree with the group-level definition of opposite") {
    std::vector<matgroup::Mat8> gens;
    for (const auto& m : group_generators(GroupName::H1)) gens.push_back(matgroup::from_rat(m));
    std::unordered_map<matgroup::Mat8, int, matgroup::Mat8Hash> seen{{matgroup::identity(), 0}};
    std::vector<matgroup::Mat8> all{matgroup::identity()};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const auto& g : gens) {
            auto p = matgroup::mul(all[i], g);
            if (seen.emplace(p, 0).second) all.push_back(p);
        }
    REQUIRE(all.size() == 23040);
    const auto z1 = exactalg::central_Z1();
    std::set<std::pair<int, int>> opposite;
    for (const auto& m : all) {
        auto h = matgroup::to_rat(m, 7);
        LLabel l = coset_classify_L(exactalg::mat_apply(h, SymVec::identity(Alphabet::V)));
        JLabel j = coset_classify_J(exactalg::mat_apply(z1 * h, SymVec::identity(Alphabet::V)));
        opposite.emplace(l.index(), j.index());
    }
    int four = 0, two = 0;
    for (int l = 0; l < 12; ++l)
        for (int j = 0; j < 32; ++j) {
            int d = t_distance(TLabel::of(LLabel::from_index(l)), TLabel::of(JLabel::from_index(j)));
            CHECK(d == (opposite.count({l, j}) ? 4 : 2));
            CHECK(d == t_distance(TLabel::of(JLabel::from_index(j)), TLabel::of(LLabel::from_index(l))));
            (d == 4 ? four : two)++;
        }
    CHECK(four == 192);
    CHECK(two == 192);
}

TEST_CASE("compression of blue-red distances") {
    for (int a = 0; a < 56; ++a)
        for (int b = 0; b < 56; ++b) {
            MLabel u = MLabel::from_index(a), v = MLabel::from_index(b);
            auto gu = gamma1(u), gv = gamma1(v);
            bool opp = gu.color != OrbitColor::J && gv.color != OrbitColor::J && gu.color != gv.color;
            CHECK(t_distance(gu.label, gv.label) == dd(u, v) - (opp ? 2 : 0));
        }
}

TEST_CASE("triple type examples") {
    auto idx = [](Space s, std::initializer_list<const char*> ls) {
        std::array<int, 3> a{};
        int k = 0;
        for (const char* l : ls) {
            if (s == Space::M) a[k++] = M(l).index();
            else if (s == Space::L) a[k++] = LLabel::parse(l).index();
            else if (s == Space::J) a[k++] = JLabel::parse(l).index();
            else a[k++] = TLabel::parse(l).index();
        }
        return a;
    };
    CHECK(classify_triple(Space::M, idx(Space::M, {"+v(0,7)", "+v(0,6)", "+v(6,7)"})) == "222");
    CHECK(classify_triple(Space::L, idx(Space::L, {"4", "5", "6"})) == "coherent");
    CHECK(classify_triple(Space::L, idx(Space::L, {"4", "5", "4bar"})) == "incoherent");
    CHECK(classify_triple(Space::J, idx(Space::J, {"p0", "p1", "p2"})) == "222");
    CHECK(classify_triple(Space::T, idx(Space::T, {"4", "4bar", "p0"})).substr(0, 4) == "JLL:");
    CHECK_THROWS(classify_triple(Space::M, {0, 0, 1}));
}

TEST_CASE("triple censuses") {
    auto m = triple_census(Space::M);
    CHECK(m.total == 27720);
    CHECK(m.orbits.size() == 5);
    CHECK(m.tags_constant);
    std::map<std::string, std::size_t> sizes;
    for (const auto& o : m.orbits) sizes[o.tag] = o.size;
    CHECK(sizes == std::map<std::string, std::size_t>{{"222", 4032}, {"224", 7560}, {"244", 12096}, {"246", 1512}, {"444", 2520}});
    auto j = triple_census(Space::J);
    std::set<std::string> jt;
    for (const auto& o : j.orbits) jt.insert(o.tag);
    CHECK(j.total == 4960);
    CHECK(jt.size() == 5);
    auto l = triple_census(Space::L);
    CHECK(l.total == 220);
    REQUIRE(l.orbits.size() == 2);
    auto t = triple_census(Space::T);
    CHECK(t.total == 13244);
    CHECK(t.orbits.size() == 18);
    CHECK(t.tags_constant);
    std::size_t sum = 0;
    for (const auto& o : t.orbits) sum += o.size;
    CHECK(sum == 13244);
}

TEST_CASE("group orders and the W(E7) gate") {
    CHECK(group_order(GroupName::GJ) == 720);
    CHECK(group_order(GroupName::GL) == 1920);
    CHECK(group_order(GroupName::H1) == 23040);
    CHECK(group_order(GroupName::Q) == 23040);
    CHECK(group_order(GroupName::G) == 51840);
    CHECK_THROWS(group_order(GroupName::H));
}

TEST_CASE("representative words reach every label") {
    for (Space s : {Space::M, Space::J, Space::L}) {
        auto words = representative_words(s);
        CHECK((int)words.size() == space_size(s));
        for (const auto& [idx, w] : words) {
            if (s == Space::M) CHECK(coset_classify_M(image(w, Side::W)).index() == idx);
            if (s == Space::J) CHECK(coset_classify_J(image(w, Side::V)).index() == idx);
            if (s == Space::L) CHECK(coset_classify_L(image(w, Side::V)).index() == idx);
        }
    }
}
