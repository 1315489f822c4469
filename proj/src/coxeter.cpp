#include "coxeter.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "matgroup.hpp"

namespace coxeter {

using exactalg::Alphabet;
using exactalg::LinForm;
using exactalg::Rat;
using exactalg::SymVec;

namespace {

int pair_index(int i, int j) {
    // Lexicographic index of 0 <= i < j <= 7 among the 28 pairs.
    return i * 8 - i * (i + 1) / 2 + (j - i - 1);
}

const std::array<const char*, 4> kTriples = {"+++", "+--", "-+-", "--+"};

std::uint8_t triple_mask(int r) {
    std::uint8_t m = 0;
    for (int p = 0; p < 3; ++p)
        if (kTriples[r][p] == '-') m |= std::uint8_t(1u << p);
    return m;
}

LinForm W(int sym) { return LinForm::symbol(Alphabet::W, sym); }
LinForm V(int sym) { return LinForm::symbol(Alphabet::V, sym); }
LinForm Vc(std::int64_t c) { return LinForm::constant(Alphabet::V, c); }

} // namespace

MLabel MLabel::make(int sign, int i, int j) {
    if (i > j) std::swap(i, j);
    if ((sign != 1 && sign != -1) || i < 0 || j > 7 || i == j) throw std::invalid_argument("MLabel: bad components");
    return {sign, i, j};
}

MLabel MLabel::from_index(int idx) {
    if (idx < 0 || idx >= 56) throw std::out_of_range("MLabel index");
    int sign = idx < 28 ? 1 : -1;
    int p = idx % 28;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (pair_index(i, j) == p) return {sign, i, j};
    throw std::logic_error("unreachable");
}

MLabel MLabel::parse(std::string_view s) {
    int sign = 1;
    std::size_t p = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        sign = s[0] == '-' ? -1 : 1;
        p = 1;
    }
    int i, j;
    std::string rest(s.substr(p));
    if (std::sscanf(rest.c_str(), "v(%d,%d)", &i, &j) != 2 || rest.back() != ')')
        throw std::invalid_argument("bad M label '" + std::string(s) + "'");
    return make(sign, i, j);
}

int MLabel::index() const { return (sign > 0 ? 0 : 28) + pair_index(i, j); }

std::string MLabel::str() const {
    return std::string(sign > 0 ? "+" : "-") + "v(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

JLabel JLabel::from_string(std::string_view s) {
    if (s.size() != 6) throw std::invalid_argument("J sign string must have 6 signs");
    JLabel t;
    for (int p = 0; p < 6; ++p) {
        if (s[p] == '-') t.minus |= std::uint8_t(1u << p);
        else if (s[p] != '+') throw std::invalid_argument("bad J sign string '" + std::string(s) + "'");
    }
    if (std::popcount(t.minus) % 2) throw std::invalid_argument("J sign string needs an even number of minus signs");
    return t;
}

JLabel JLabel::from_pn(bool negated, int k) {
    if (k < 0 || k > 15) throw std::out_of_range("J label subscript");
    int q = k / 4, r = k % 4;
    JLabel t;
    t.minus = std::uint8_t(triple_mask(r) | (triple_mask(q) << 3));
    if (negated) t.minus ^= 0x3f;
    return t;
}

JLabel JLabel::from_index(int idx) {
    if (idx < 0 || idx >= 32) throw std::out_of_range("JLabel index");
    return from_pn(idx >= 16, idx % 16);
}

JLabel JLabel::parse(std::string_view s) {
    if (!s.empty() && (s[0] == 'p' || s[0] == 'n')) {
        int k = std::stoi(std::string(s.substr(1)));
        return from_pn(s[0] == 'n', k);
    }
    return from_string(s);
}

bool JLabel::negated() const {
    // p labels have an even number of minus signs in each half.
    return std::popcount(unsigned(minus & 7)) % 2 == 1;
}

int JLabel::k() const {
    std::uint8_t m = negated() ? std::uint8_t(minus ^ 0x3f) : minus;
    int r = -1, q = -1;
    for (int t = 0; t < 4; ++t) {
        if (triple_mask(t) == (m & 7)) r = t;
        if (triple_mask(t) == (m >> 3)) q = t;
    }
    return 4 * q + r;
}

int JLabel::index() const { return (negated() ? 16 : 0) + k(); }

std::string JLabel::signs() const {
    std::string s(6, '+');
    for (int p = 0; p < 6; ++p)
        if (minus & (1u << p)) s[p] = '-';
    return s;
}

std::string JLabel::str() const { return (negated() ? "n" : "p") + std::to_string(k()); }

LLabel LLabel::from_index(int idx) {
    if (idx < 0 || idx >= 12) throw std::out_of_range("LLabel index");
    return {idx % 6 + 1, idx >= 6};
}

LLabel LLabel::parse(std::string_view s) {
    if (s.empty() || s[0] < '1' || s[0] > '6') throw std::invalid_argument("bad L label '" + std::string(s) + "'");
    if (s.size() == 1) return {s[0] - '0', false};
    if (s.substr(1) == "bar") return {s[0] - '0', true};
    throw std::invalid_argument("bad L label '" + std::string(s) + "'");
}

int LLabel::index() const { return (idx - 1) + (bar ? 6 : 0); }

std::string LLabel::str() const { return std::to_string(idx) + (bar ? "bar" : ""); }

TLabel TLabel::from_index(int idx) {
    if (idx < 0 || idx >= 44) throw std::out_of_range("TLabel index");
    return idx < 12 ? of(LLabel::from_index(idx)) : of(JLabel::from_index(idx - 12));
}

TLabel TLabel::parse(std::string_view s) {
    if (!s.empty() && s[0] >= '1' && s[0] <= '6') return of(LLabel::parse(s));
    return of(JLabel::parse(s));
}

int TLabel::index() const { return is_j ? 12 + j.index() : l.index(); }

std::string TLabel::str() const { return is_j ? j.str() : l.str(); }

const char* color_name(OrbitColor c) {
    switch (c) {
    case OrbitColor::BlueL: return "blue";
    case OrbitColor::RedL: return "red";
    case OrbitColor::J: return "J";
    }
    return "?";
}

MLabel act_M(const std::string& g, MLabel t) {
    if (g == "s3'") {
        for (int base : {0, 4}) {
            if (t.i >= base && t.j < base + 4) {
                int rest[2], n = 0;
                for (int x = base; x < base + 4; ++x)
                    if (x != t.i && x != t.j) rest[n++] = x;
                return MLabel::make(-t.sign, rest[0], rest[1]);
            }
        }
        return t;
    }
    if (g.size() != 2 || g[0] != 's' || g[1] < '1' || g[1] > '6') throw std::invalid_argument("unknown W generator '" + g + "'");
    int k = 6 - (g[1] - '0');
    auto rho = [&](int x) { return x == k + 1 ? k + 2 : x == k + 2 ? k + 1 : x; };
    return MLabel::make(t.sign, rho(t.i), rho(t.j));
}

JLabel act_J(const std::string& g, JLabel t) {
    auto bit = [&](int p) { return (t.minus >> p) & 1u; };
    JLabel r = t;
    if (g == "a1'") {
        r.minus &= std::uint8_t(~3u);
        r.minus |= std::uint8_t((bit(1) ^ 1u) | ((bit(0) ^ 1u) << 1));
        return r;
    }
    if (g.size() != 2 || g[0] != 'a' || g[1] < '1' || g[1] > '5') throw std::invalid_argument("unknown V generator '" + g + "'");
    int k = g[1] - '1';
    unsigned x = bit(k), y = bit(k + 1);
    r.minus &= std::uint8_t(~((1u << k) | (1u << (k + 1))));
    r.minus |= std::uint8_t((y << k) | (x << (k + 1)));
    return r;
}

LLabel act_L(const std::string& g, LLabel t) {
    if (g == "a1'") {
        if (t.idx == 1) return {2, !t.bar};
        if (t.idx == 2) return {1, !t.bar};
        return t;
    }
    if (g.size() != 2 || g[0] != 'a' || g[1] < '1' || g[1] > '5') throw std::invalid_argument("unknown V generator '" + g + "'");
    int k = g[1] - '0';
    if (t.idx == k) return {k + 1, t.bar};
    if (t.idx == k + 1) return {k, t.bar};
    return t;
}

TLabel act_T(const std::string& g, TLabel t) {
    return t.is_j ? TLabel::of(act_J(g, t.j)) : TLabel::of(act_L(g, t.l));
}

MLabel act_M(const GenWord& w, MLabel t) {
    for (const auto& g : w) t = act_M(g, t);
    return t;
}

JLabel act_J(const GenWord& w, JLabel t) {
    for (const auto& g : w) t = act_J(g, t);
    return t;
}

MLabel central_involution(MLabel t) { return {-t.sign, t.i, t.j}; }

TLabel central_involution(TLabel t) {
    if (t.is_j) return TLabel::of(JLabel{std::uint8_t(t.j.minus ^ 0x3f)});
    return TLabel::of(LLabel{t.l.idx, !t.l.bar});
}

int x_symbol(int i) {
    if (i < 0 || i > 7) throw std::out_of_range("x index");
    return i == 0 ? 1 : i == 7 ? 0 : 8 - i;
}

namespace {

const std::map<LinForm, MLabel>& m_table() {
    static const std::map<LinForm, MLabel> t = [] {
        std::map<LinForm, MLabel> m;
        LinForm x7 = W(x_symbol(7));
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                LinForm pos = W(x_symbol(i)) + W(x_symbol(j)) - x7;
                LinForm neg = (x7 - W(x_symbol(i)) - W(x_symbol(j))) + Rat(1);
                m[exactalg::reduce(pos)] = MLabel::make(1, i, j);
                m[exactalg::reduce(neg)] = MLabel::make(-1, i, j);
            }
        if (m.size() != 56) throw std::logic_error("M coset forms are not distinct");
        return m;
    }();
    return t;
}

const std::map<LinForm, JLabel>& j_table() {
    static const std::map<LinForm, JLabel> t = [] {
        std::map<LinForm, JLabel> m;
        for (int q = 0; q < 4; ++q)
            for (int r = 0; r < 4; ++r) {
                LinForm Ar = V(r);
                LinForm Eq = q == 0 ? Vc(1) : V(3 + q);
                m[exactalg::reduce((Ar - Eq) + Rat(1))] = JLabel::from_pn(false, 4 * q + r);
                m[exactalg::reduce(Eq - Ar)] = JLabel::from_pn(true, 4 * q + r);
            }
        if (m.size() != 32) throw std::logic_error("J coset forms are not distinct");
        return m;
    }();
    return t;
}

LinForm l_invariant(const std::vector<LinForm>& args) {
    if (args.size() != 7) throw std::invalid_argument("L argument list needs 7 entries");
    return exactalg::reduce(args[5] + args[6] - args[4]);
}

const std::map<LinForm, LLabel>& l_table() {
    static const std::map<LinForm, LLabel> t = [] {
        std::map<LinForm, LLabel> m;
        for (int i = 0; i < 12; ++i) m[l_invariant(lcoset_row(LLabel::from_index(i)))] = LLabel::from_index(i);
        if (m.size() != 12) throw std::logic_error("L coset invariants are not distinct");
        return m;
    }();
    return t;
}

} // namespace

MLabel coset_classify_M(const SymVec& v) {
    if (v.size() != 8 || v.alphabet() != Alphabet::W) throw std::invalid_argument("coset_classify_M: need a W-side vector");
    auto it = m_table().find(exactalg::reduce(v[1]));
    if (it == m_table().end()) throw std::invalid_argument("coset_classify_M: second entry " + v[1].str() + " is not a coset form");
    return it->second;
}

JLabel classify_J_first(const LinForm& first) {
    auto it = j_table().find(exactalg::reduce(first, Alphabet::V));
    if (it == j_table().end()) throw std::invalid_argument("coset_classify_J: first entry " + first.str() + " is not a coset form");
    return it->second;
}

JLabel coset_classify_J(const SymVec& v) {
    if (v.size() != 7 || v.alphabet() != Alphabet::V) throw std::invalid_argument("coset_classify_J: need a V-side vector");
    return classify_J_first(v[0]);
}

std::vector<LinForm> lcoset_row(LLabel t) {
    LinForm A = V(0), B = V(1), C = V(2), D = V(3), E = V(4), F = V(5), G = V(6);
    auto one = [](const LinForm& f) { return f + Rat(1); };
    auto omi = [](const LinForm& f) { return Rat(1) - f; };
    auto tmi = [](const LinForm& f) { return Rat(2) - f; };
    if (!t.bar) {
        switch (t.idx) {
        case 6: return {A, B, C, D, G, F, E};
        case 5: return {A, B, C, D, F, E, G};
        case 4: return {A, B, C, D, E, F, G};
        case 3: return {A, one(A - E), one(A - F), one(A - G), one(A - D), one(A - B), one(A - C)};
        case 2: return {A, one(A - E), one(A - F), one(A - G), one(A - C), one(A - B), one(A - D)};
        case 1: return {A, one(A - E), one(A - F), one(A - G), one(A - B), one(A - C), one(A - D)};
        }
    } else {
        switch (t.idx) {
        case 6: return {omi(A), omi(B), omi(C), omi(D), tmi(G), tmi(F), tmi(E)};
        case 5: return {omi(A), omi(B), omi(C), omi(D), tmi(F), tmi(E), tmi(G)};
        case 4: return {omi(A), omi(B), omi(C), omi(D), tmi(E), tmi(F), tmi(G)};
        case 3: return {omi(A), E - A, F - A, G - A, one(D - A), one(B - A), one(C - A)};
        case 2: return {omi(A), E - A, F - A, G - A, one(C - A), one(B - A), one(D - A)};
        case 1: return {omi(A), E - A, F - A, G - A, one(B - A), one(C - A), one(D - A)};
        }
    }
    throw std::invalid_argument("bad L label");
}

LLabel classify_L_args(const std::vector<LinForm>& args) {
    auto it = l_table().find(l_invariant(args));
    if (it == l_table().end()) throw std::invalid_argument("classify_L: argument list is not in an L coset");
    return it->second;
}

LLabel coset_classify_L(const SymVec& v) {
    if (v.size() != 7 || v.alphabet() != Alphabet::V) throw std::invalid_argument("coset_classify_L: need a V-side vector");
    return classify_L_args(v.entries);
}

Gamma1 gamma1(MLabel t) {
    if (t.i == 0 && t.j == 1) {
        JLabel s{std::uint8_t(t.sign > 0 ? 0 : 0x3f)};
        return {OrbitColor::J, TLabel::of(s)};
    }
    if (t.i == 0 || t.i == 1) {
        LLabel l{t.j - 1, false};
        bool blue = (t.i == 0) == (t.sign > 0);
        l.bar = t.sign < 0;
        return {blue ? OrbitColor::BlueL : OrbitColor::RedL, TLabel::of(l)};
    }
    std::uint8_t m = 0x3f;
    m &= std::uint8_t(~(1u << (t.i - 2)));
    m &= std::uint8_t(~(1u << (t.j - 2)));
    if (t.sign < 0) m ^= 0x3f;
    return {OrbitColor::J, TLabel::of(JLabel{m})};
}

std::string m_iso(const std::string& g) {
    if (g == "s3'") return "a1'";
    if (g.size() == 2 && g[0] == 's' && g[1] >= '1' && g[1] <= '5') return "a" + std::to_string(6 - (g[1] - '0'));
    throw std::invalid_argument("m_iso: '" + g + "' is not a generator of Q");
}

std::array<std::vector<MLabel>, 3> orbits_Q() {
    const std::vector<std::string> gens{"s1", "s2", "s3", "s4", "s5", "s3'"};
    auto closure = [&](MLabel start) {
        std::set<MLabel> seen{start};
        std::deque<MLabel> q{start};
        while (!q.empty()) {
            MLabel t = q.front();
            q.pop_front();
            for (const auto& g : gens) {
                MLabel u = act_M(g, t);
                if (seen.insert(u).second) q.push_back(u);
            }
        }
        return std::vector<MLabel>(seen.begin(), seen.end());
    };
    return {closure(MLabel::make(1, 0, 2)), closure(MLabel::make(-1, 0, 2)), closure(MLabel::make(1, 0, 1))};
}

std::array<int, 8> vij_vector(MLabel t) {
    std::array<int, 8> v;
    v.fill(-t.sign);
    v[t.i] = 3 * t.sign;
    v[t.j] = 3 * t.sign;
    return v;
}

int dd(MLabel u, MLabel v) {
    auto a = vij_vector(u), b = vij_vector(v);
    int s = 0;
    for (int k = 0; k < 8; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    if (s % 16) throw std::logic_error("dd: squared distance not divisible by 16");
    return s / 16;
}

int dd_case_table(MLabel u, MLabel v) {
    int shared = (u.i == v.i || u.i == v.j) + (u.j == v.i || u.j == v.j);
    static const int same[3] = {4, 2, 0}, opposite[3] = {2, 4, 6};
    return u.sign == v.sign ? same[shared] : opposite[shared];
}

int hamming(JLabel a, JLabel b) { return std::popcount(unsigned(a.minus ^ b.minus)); }

MLabel t_preimage(TLabel t) {
    if (!t.is_j) return t.l.bar ? MLabel::make(-1, 1, t.l.idx + 1) : MLabel::make(1, 0, t.l.idx + 1);
    static const std::map<int, MLabel> inv = [] {
        std::map<int, MLabel> m;
        for (int i = 0; i < 56; ++i) {
            auto g = gamma1(MLabel::from_index(i));
            if (g.color == OrbitColor::J) m[g.label.index()] = MLabel::from_index(i);
        }
        return m;
    }();
    return inv.at(t.index());
}

int t_distance(TLabel s, TLabel t) { return dd(t_preimage(s), t_preimage(t)); }

Space parse_space(std::string_view s) {
    if (s == "M") return Space::M;
    if (s == "J") return Space::J;
    if (s == "L") return Space::L;
    if (s == "T") return Space::T;
    throw std::invalid_argument("unknown space '" + std::string(s) + "'");
}

const char* space_name(Space s) {
    switch (s) {
    case Space::M: return "M";
    case Space::J: return "J";
    case Space::L: return "L";
    case Space::T: return "T";
    }
    return "?";
}

int space_size(Space s) {
    switch (s) {
    case Space::M: return 56;
    case Space::J: return 32;
    case Space::L: return 12;
    case Space::T: return 44;
    }
    return 0;
}

std::string label_str(Space s, int idx) {
    switch (s) {
    case Space::M: return MLabel::from_index(idx).str();
    case Space::J: return JLabel::from_index(idx).str();
    case Space::L: return LLabel::from_index(idx).str();
    case Space::T: return TLabel::from_index(idx).str();
    }
    return "?";
}

int act_index(Space s, const std::string& g, int idx) {
    switch (s) {
    case Space::M: return act_M(g, MLabel::from_index(idx)).index();
    case Space::J: return act_J(g, JLabel::from_index(idx)).index();
    case Space::L: return act_L(g, LLabel::from_index(idx)).index();
    case Space::T: return act_T(g, TLabel::from_index(idx)).index();
    }
    return -1;
}

const std::vector<std::string>& space_generators(Space s) {
    return exactalg::generator_names(s == Space::M ? Side::W : Side::V);
}

std::string classify_triple(Space s, std::array<int, 3> t) {
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) throw std::invalid_argument("classify_triple: labels must be distinct");
    auto tag3 = [](std::array<int, 3> d) {
        std::sort(d.begin(), d.end());
        return std::to_string(d[0]) + std::to_string(d[1]) + std::to_string(d[2]);
    };
    switch (s) {
    case Space::M: {
        MLabel a = MLabel::from_index(t[0]), b = MLabel::from_index(t[1]), c = MLabel::from_index(t[2]);
        return tag3({dd(a, b), dd(a, c), dd(b, c)});
    }
    case Space::J: {
        JLabel a = JLabel::from_index(t[0]), b = JLabel::from_index(t[1]), c = JLabel::from_index(t[2]);
        return tag3({hamming(a, b), hamming(a, c), hamming(b, c)});
    }
    case Space::L: {
        std::array<LLabel, 3> l{LLabel::from_index(t[0]), LLabel::from_index(t[1]), LLabel::from_index(t[2])};
        for (int x = 0; x < 3; ++x)
            for (int y = x + 1; y < 3; ++y)
                if (l[x].idx == l[y].idx) return "incoherent";
        return "coherent";
    }
    case Space::T: {
        std::array<TLabel, 3> l{TLabel::from_index(t[0]), TLabel::from_index(t[1]), TLabel::from_index(t[2])};
        int nj = int(l[0].is_j) + int(l[1].is_j) + int(l[2].is_j);
        static const char* comp[4] = {"LLL", "JLL", "LJJ", "JJJ"};
        return std::string(comp[nj]) + ":" + tag3({t_distance(l[0], l[1]), t_distance(l[0], l[2]), t_distance(l[1], l[2])});
    }
    }
    return "?";
}

TripleCensus triple_census(Space s) {
    int n = space_size(s);
    const auto& gens = space_generators(s);
    std::vector<std::vector<int>> act(gens.size(), std::vector<int>(n));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int i = 0; i < n; ++i) act[g][i] = act_index(s, gens[g], i);

    auto key = [n](std::array<int, 3> t) {
        std::sort(t.begin(), t.end());
        return (t[0] * n + t[1]) * n + t[2];
    };
    std::vector<int> orbit_of(n * n * n, -1);
    TripleCensus out{s, 0, {}, true};
    // Triples are visited in increasing sorted order, so each orbit's first
    // visit is its smallest member and orbits come out sorted.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                ++out.total;
                int k0 = key({a, b, c});
                if (orbit_of[k0] >= 0) continue;
                int id = (int)out.orbits.size();
                OrbitInfo info;
                info.first = {a, b, c};
                info.tag = classify_triple(s, info.first);
                std::deque<std::array<int, 3>> q{{a, b, c}};
                orbit_of[k0] = id;
                while (!q.empty()) {
                    auto t = q.front();
                    q.pop_front();
                    ++info.size;
                    if (classify_triple(s, t) != info.tag) out.tags_constant = false;
                    for (std::size_t g = 0; g < gens.size(); ++g) {
                        std::array<int, 3> u{act[g][t[0]], act[g][t[1]], act[g][t[2]]};
                        int k = key(u);
                        if (orbit_of[k] < 0) {
                            orbit_of[k] = id;
                            q.push_back(u);
                        }
                    }
                }
                out.orbits.push_back(info);
            }
    return out;
}

GroupName parse_group(std::string_view s) {
    if (s == "GJ" || s == "G_J") return GroupName::GJ;
    if (s == "GL" || s == "G_L") return GroupName::GL;
    if (s == "H1") return GroupName::H1;
    if (s == "Q") return GroupName::Q;
    if (s == "G") return GroupName::G;
    if (s == "H" || s == "E7") return GroupName::H;
    throw std::invalid_argument("unknown group '" + std::string(s) + "'");
}

const char* group_name(GroupName g) {
    switch (g) {
    case GroupName::GJ: return "GJ";
    case GroupName::GL: return "GL";
    case GroupName::H1: return "H1";
    case GroupName::Q: return "Q";
    case GroupName::G: return "G";
    case GroupName::H: return "H";
    }
    return "?";
}

std::vector<exactalg::RatMatrix> group_generators(GroupName g) {
    using exactalg::RatMatrix;
    auto W = [](const char* n) { return exactalg::generator(n, Side::W); };
    auto Vg = [](const char* n) { return exactalg::generator(n, Side::V); };
    auto t7 = [](int i, int j) { return RatMatrix::transposition(7, i, j); };
    switch (g) {
    case GroupName::GJ: return {t7(2, 3), t7(3, 4), t7(5, 6), t7(6, 7), exactalg::matrix_X1()};
    case GroupName::GL: return {t7(1, 2), t7(2, 3), t7(3, 4), t7(6, 7), t7(5, 7) * exactalg::matrix_X1() * t7(5, 7)};
    case GroupName::H1: return {Vg("a1"), Vg("a2"), Vg("a3"), Vg("a4"), Vg("a5"), Vg("a1'")};
    case GroupName::Q: return {W("s1"), W("s2"), W("s3"), W("s4"), W("s5"), W("s3'")};
    case GroupName::G: return {W("s2"), W("s3"), W("s4"), W("s5"), W("s6"), W("s3'")};
    case GroupName::H: return {W("s1"), W("s2"), W("s3"), W("s4"), W("s5"), W("s3'"), W("s6")};
    }
    return {};
}

std::uint64_t group_order(GroupName g, bool allow_large) {
    if (g == GroupName::H && !allow_large)
        throw std::runtime_error("full W(E7) enumeration holds 2903040 matrices (about 400 MB); pass the override flag to run it");
    std::vector<matgroup::Mat8> gens;
    for (const auto& m : group_generators(g)) gens.push_back(matgroup::from_rat(m));
    std::unordered_set<matgroup::Mat8, matgroup::Mat8Hash> seen;
    std::vector<matgroup::Mat8> frontier{matgroup::identity()};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<matgroup::Mat8> next;
        for (const auto& m : frontier)
            for (const auto& s : gens) {
                auto p = matgroup::mul(m, s);
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier.swap(next);
    }
    return seen.size();
}

std::map<int, GenWord> representative_words(Space s) {
    if (s == Space::T) throw std::invalid_argument("representative_words: T has no single base coset");
    const auto& gens = space_generators(s);
    int start = s == Space::M ? MLabel::make(1, 0, 7).index() : s == Space::J ? JLabel{}.index() : LLabel{4, false}.index();
    std::map<int, GenWord> words{{start, {}}};
    std::deque<int> q{start};
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (const auto& g : gens) {
            int u = act_index(s, g, t);
            if (!words.count(u)) {
                GenWord w = words[t];
                w.push_back(g);
                words[u] = w;
                q.push_back(u);
            }
        }
    }
    return words;
}

} // namespace coxeter
