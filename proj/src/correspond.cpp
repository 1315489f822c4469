#include "correspond.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace correspond {

using exactalg::SymVec;
using hypnum::PointW;

namespace {

LinForm w(std::string_view s) { return LinForm::parse(s, Alphabet::W); }
LinForm v(std::string_view s) { return LinForm::parse(s, Alphabet::V); }

std::vector<LinForm> ws(std::initializer_list<std::string_view> xs) {
    std::vector<LinForm> r;
    for (auto s : xs) r.push_back(w(s));
    return r;
}

std::vector<LinForm> vs(std::initializer_list<std::string_view> xs) {
    std::vector<LinForm> r;
    for (auto s : xs) r.push_back(v(s));
    return r;
}

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

std::vector<CNum> eval_all(const std::vector<LinForm>& fs, std::span<const CNum> vals) {
    std::vector<CNum> r;
    for (const auto& f : fs) r.push_back(f.eval(vals));
    return r;
}

} // namespace

const char* fun_kind_name(FunKind k) {
    switch (k) {
    case FunKind::M: return "M";
    case FunKind::J: return "J";
    case FunKind::L: return "L";
    }
    return "?";
}

FunTerm FunTerm::make(FunKind kind, std::vector<LinForm> args) {
    std::size_t n = kind == FunKind::M ? 8 : 7;
    if (args.size() != n) throw std::invalid_argument(std::string("FunTerm ") + fun_kind_name(kind) + ": wrong number of arguments");
    Alphabet al = args.front().alphabet();
    for (auto& a : args) {
        if (a.alphabet() != al) throw std::invalid_argument("FunTerm: mixed alphabets");
        a = exactalg::reduce(a);
    }
    LinForm id(al);
    if (kind == FunKind::M) {
        id = Rat(2) + args[0] * Rat(3);
        for (int k = 1; k < 8; ++k) id -= args[k];
    } else {
        id = args[4] + args[5] + args[6] - args[0] - args[1] - args[2] - args[3] - Rat(1);
    }
    if (!exactalg::reduce(id).is_zero())
        throw std::invalid_argument(std::string("FunTerm ") + fun_kind_name(kind) + ": arguments are off the hyperplane");
    return {kind, std::move(args)};
}

CNum FunTerm::eval(std::span<const CNum> vals, const hypnum::SeriesCtrl& ctrl, hypnum::EvalDiag* diag) const {
    auto x = eval_all(args, vals);
    switch (kind) {
    case FunKind::M: return hypnum::eval_M(x, ctrl, diag);
    case FunKind::J: return hypnum::eval_J(x, ctrl, diag);
    case FunKind::L: return hypnum::eval_L(x, ctrl, diag);
    }
    return 0;
}

std::string FunTerm::label() const {
    if (kind == FunKind::M) return coxeter::coset_classify_M(SymVec{args, exactalg::constraint(Alphabet::W)}).str();
    if (alphabet() == Alphabet::W) return classify_target(kind, args).str();
    if (kind == FunKind::J) return coxeter::classify_J_first(args[0]).str();
    return coxeter::classify_L_args(args).str();
}

std::string FunTerm::str() const {
    // Separators follow the bracket notation: M[a;b;c,...], J[A;B,C,D;E,F,G], L[A,B,C,D;E;F,G].
    static const char* sepM[] = {"", ";", ";", ",", ",", ",", ",", ","};
    static const char* sepJ[] = {"", ";", ",", ",", ";", ",", ","};
    static const char* sepL[] = {"", ",", ",", ",", ";", ";", ","};
    const char** sep = kind == FunKind::M ? sepM : kind == FunKind::J ? sepJ : sepL;
    std::string s = std::string(fun_kind_name(kind)) + "[";
    for (std::size_t k = 0; k < args.size(); ++k) s += sep[k] + args[k].str();
    return s + "]";
}

GammaSinExpr& GammaSinExpr::gamma(std::initializer_list<LinForm> args) {
    for (const auto& a : args) num.push_back({FactorKind::Gamma, a});
    return *this;
}

GammaSinExpr& GammaSinExpr::over_gamma(std::initializer_list<LinForm> args) {
    for (const auto& a : args) den.push_back({FactorKind::Gamma, a});
    return *this;
}

GammaSinExpr& GammaSinExpr::sin_pi(const LinForm& arg) {
    num.push_back({FactorKind::SinPi, arg});
    return *this;
}

GammaSinExpr& GammaSinExpr::over_sin_pi(const LinForm& arg) {
    den.push_back({FactorKind::SinPi, arg});
    return *this;
}

GammaSinExpr& GammaSinExpr::times(Rat r, int pi_pow) {
    prefactor *= r;
    piPow += pi_pow;
    return *this;
}

LogC GammaSinExpr::eval_log(std::span<const CNum> vals) const {
    if (is_zero()) throw std::domain_error("GammaSinExpr: zero coefficient has no logarithm");
    LogC r = LogC::of(CNum(prefactor.to_double())) + LogC{piPow * std::log(std::numbers::pi), 0.0};
    auto f = [&](const Factor& x) {
        CNum z = x.arg.eval(vals);
        return x.kind == FactorKind::Gamma ? hypnum::lgamma(z) : hypnum::log_sin_pi(z);
    };
    for (const auto& x : num) r += f(x);
    for (const auto& x : den) r -= f(x);
    return r;
}

GammaSinExpr GammaSinExpr::substitute(std::span<const LinForm> subs) const {
    GammaSinExpr r = *this;
    for (auto& x : r.num) x.arg = exactalg::reduce(x.arg.substitute(subs));
    for (auto& x : r.den) x.arg = exactalg::reduce(x.arg.substitute(subs));
    return r;
}

std::vector<LinForm> GammaSinExpr::arguments() const {
    std::vector<LinForm> r;
    for (const auto& x : num) r.push_back(x.arg);
    for (const auto& x : den) r.push_back(x.arg);
    return r;
}

std::string GammaSinExpr::str() const {
    auto list = [](const std::vector<Factor>& fs) {
        std::string s;
        for (const auto& x : fs) {
            if (!s.empty()) s += " ";
            s += (x.kind == FactorKind::Gamma ? "G(" : "sinpi(") + x.arg.str() + ")";
        }
        return s.empty() ? std::string("1") : s;
    };
    std::string s = prefactor.str();
    if (piPow) s += " pi^" + std::to_string(piPow);
    return s + " * " + list(num) + " / " + list(den);
}

std::map<std::string, Relation> builtin_relations() {
    std::map<std::string, Relation> out;
    auto M = [](std::initializer_list<std::string_view> a) { return FunTerm::make(FunKind::M, ws(a)); };

    {
        Relation r{"roy463", {}, "type 222 M relation at v(0,7), v(6,7), v(0,6)"};
        GammaSinExpr c1, c2, c3;
        c1.sin_pi(w("b-a")).over_gamma({w("c-a+d"), w("c-a+e"), w("c-a+f"), w("c-a+g"), w("c-a+h")});
        c2.sin_pi(w("a-c")).over_gamma({w("b-a+d"), w("b-a+e"), w("b-a+f"), w("b-a+g"), w("b-a+h")});
        c3.sin_pi(w("c-b")).over_gamma({w("d"), w("e"), w("f"), w("g"), w("h")});
        r.terms = {
            {c1, M({"a", "b", "c", "d", "e", "f", "g", "h"})},
            {c2, M({"a", "c", "b", "d", "e", "f", "g", "h"})},
            {c3, M({"2c-a", "c+b-a", "c", "c+d-a", "c+e-a", "c+f-a", "c+g-a", "c+h-a"})},
        };
        out[r.name] = r;
    }
    {
        Relation r{"roy463b", {}, "roy463 normalized for the Im(b) limit"};
        GammaSinExpr c1, c2, c3;
        c1.times(2, -1)
            .sin_pi(w("c+g-a"))
            .over_gamma({w("1-g"), w("c-a+d"), w("c-a+e"), w("c-a+f")})
            .gamma({w("1+a-h"), w("b-a+c"), w("b-a+d"), w("b-a+e"), w("b-a+f"), w("b-a+g")})
            .over_gamma({w("b-a")});
        c2.times(2, -1)
            .sin_pi(w("a-c"))
            .over_gamma({w("1-c"), w("2+2a-c-d-e-f-g"), w("1-g"), w("1+a-c-g")})
            .gamma({w("1-c"), w("1+a-b"), w("1+a-h"), w("c-a+b"), w("c-a+h")});
        // The Pochhammer bracket (b)_y (h)_y / ((1+a-b)_y (1+a-h)_y), y = c-a, as Gamma quotients.
        c3.times(-2, -1)
            .sin_pi(w("g"))
            .over_gamma({w("1+a-c-g"), w("d"), w("e"), w("f")})
            .gamma({w("b+c-a"), w("h+c-a"), w("1+a-b"), w("1+a-h")})
            .over_gamma({w("b"), w("h"), w("1+c-b"), w("1+c-h")})
            .gamma({w("1+c-h"), w("b"), w("b-a+d"), w("b-a+e"), w("b-a+f"), w("b-a+g")})
            .over_gamma({w("b-c")});
        r.terms = {
            {c1, M({"a", "b", "c", "d", "e", "f", "g", "h"})},
            {c2, M({"a", "c", "g", "d", "e", "f", "b", "h"})},
            {c3, M({"2c-a", "c+b-a", "c", "c+d-a", "c+e-a", "c+f-a", "c+g-a", "c+h-a"})},
        };
        out[r.name] = r;
    }
    {
        Relation r{"orbit1jll", {}, "(J,L,L) relation among J_p0, L_4, L_5"};
        GammaSinExpr c1, c2, c3;
        c1.sin_pi(v("F-E")).over_gamma({v("1-A"), v("E-A"), v("F-A"), v("G-A")});
        c2.sin_pi(v("F-A")).over_gamma({v("E-A"), v("E-B"), v("E-C"), v("E-D")});
        c3.times(-1).sin_pi(v("E-A")).over_gamma({v("F-A"), v("F-B"), v("F-C"), v("F-D")});
        r.terms = {
            {c1, FunTerm::make(FunKind::J, vs({"A", "B", "C", "D", "E", "F", "G"}))},
            {c2, FunTerm::make(FunKind::L, vs({"A", "B", "C", "D", "E", "F", "G"}))},
            {c3, FunTerm::make(FunKind::L, vs({"A", "B", "C", "D", "F", "E", "G"}))},
        };
        out[r.name] = r;
    }
    return out;
}

Relation translate_relation(const Relation& r, const exactalg::GenWord& word, exactalg::Side side) {
    Alphabet al = side == exactalg::Side::W ? Alphabet::W : Alphabet::V;
    for (const auto& t : r.terms)
        if (t.fun.alphabet() != al) throw std::invalid_argument("translate_relation: word side does not match the relation");
    auto subs = exactalg::mat_apply(exactalg::word_to_matrix(word, side), SymVec::identity(al)).entries;
    Relation out{r.name, {}, r.provenance};
    if (!word.empty()) out.name += " * " + exactalg::word_str(word);
    for (const auto& t : r.terms) {
        std::vector<LinForm> args;
        for (const auto& a : t.fun.args) args.push_back(a.substitute(subs));
        out.terms.push_back({t.coef.substitute(subs), FunTerm::make(t.fun.kind, std::move(args))});
    }
    return out;
}

RelationEval eval_relation(const Relation& r, std::span<const CNum> vals, const hypnum::SeriesCtrl& ctrl) {
    RelationEval out;
    std::vector<LogC> logs;
    for (const auto& t : r.terms) {
        if (t.coef.is_zero()) continue;
        hypnum::EvalDiag d;
        CNum f = t.fun.eval(vals, ctrl, &d);
        TermValue tv;
        tv.lowPrecision = d.lowPrecision;
        if (f == CNum(0)) {
            tv.log = {-std::numeric_limits<double>::infinity(), 0};
        } else {
            tv.log = t.coef.eval_log(vals) + LogC::of(f);
        }
        out.terms.push_back(tv);
        logs.push_back(tv.log);
    }
    double m = -std::numeric_limits<double>::infinity(), lo = std::numeric_limits<double>::infinity();
    for (const auto& l : logs) {
        m = std::max(m, l.logMag);
        lo = std::min(lo, l.logMag);
    }
    if (logs.empty() || !std::isfinite(m)) {
        out.allZero = true;
        return out;
    }
    CNum sum = 0;
    for (const auto& l : logs)
        if (std::isfinite(l.logMag)) sum += std::polar(std::exp(l.logMag - m), l.phase);
    out.residual = std::abs(sum);
    out.logSpread = std::isfinite(lo) ? m - lo : std::numeric_limits<double>::infinity();
    return out;
}

SymVec xfromw() {
    return SymVec{ws({"2+2a-c-d-e-f-g", "1+a-e-f", "1+a-e-g", "1+a-f-g", "2+2a-d-e-f-g", "2+2a-c-e-f-g", "2+a-e-f-g"}),
                  exactalg::constraint(Alphabet::W)};
}

std::vector<LinForm> wfromx() {
    // b and h never occur in a target, so they map to zero.
    return vs({"1+B+C+D-2G", "0", "E-A", "F-A", "1+D-G", "1+C-G", "1+B-G", "0"});
}

TLabel classify_target(FunKind kind, const std::vector<LinForm>& args) {
    if (kind == FunKind::M) throw std::invalid_argument("classify_target: M is not a target kind");
    auto sub = wfromx();
    std::vector<LinForm> x;
    for (const auto& a : args) {
        LinForm r = exactalg::reduce(a, Alphabet::W);
        if (!r.coef(1).is_zero() || !r.coef(7).is_zero()) throw std::invalid_argument("classify_target: argument " + a.str() + " is not b- and h-free");
        x.push_back(exactalg::reduce(r.substitute(sub), Alphabet::V));
    }
    if (kind == FunKind::J) return TLabel::of(coxeter::classify_J_first(x[0]));
    return TLabel::of(coxeter::classify_L_args(x));
}

FunTerm gamma2_target(MLabel t) {
    auto g = coxeter::gamma1(t);
    auto x = xfromw().entries;
    std::vector<LinForm> row;
    if (!g.label.is_j) {
        row = coxeter::lcoset_row(g.label.l);
    } else {
        static const auto words = coxeter::representative_words(coxeter::Space::J);
        auto m = exactalg::word_to_matrix(words.at(g.label.j.index()), exactalg::Side::V);
        row = exactalg::mat_apply(m, SymVec::identity(Alphabet::V)).entries;
    }
    std::vector<LinForm> args;
    for (const auto& f : row) args.push_back(f.substitute(x));
    return FunTerm::make(g.label.is_j ? FunKind::J : FunKind::L, std::move(args));
}

namespace {

using Row = std::vector<LinForm>;

Row canon(Row r) {
    for (auto& f : r) f = exactalg::reduce(f, Alphabet::W);
    std::sort(r.begin() + 2, r.end());
    return r;
}

// G-orbit of a coset vector modulo permutations of slots 3-8: s2..s6 permute
// those slots, so closing under X after every split of them into the three
// slots X mixes and the three it fixes reaches the whole orbit.
std::set<Row> g_orbit(const Row& start) {
    static const auto X = exactalg::matrix_X();
    std::set<Row> seen{canon(start)};
    std::deque<Row> q{*seen.begin()};
    while (!q.empty()) {
        Row u = q.front();
        q.pop_front();
        for (int m = 0; m < 64; ++m) {
            if (std::popcount(unsigned(m)) != 3) continue;
            Row arr{u[0], u[1]};
            for (int k = 0; k < 6; ++k)
                if (m & (1 << k)) arr.push_back(u[2 + k]);
            for (int k = 0; k < 6; ++k)
                if (!(m & (1 << k))) arr.push_back(u[2 + k]);
            Row img = canon(exactalg::mat_apply(X, SymVec{arr, exactalg::constraint(Alphabet::W)}).entries);
            if (seen.insert(img).second) q.push_back(img);
        }
    }
    return seen;
}

const std::map<int, std::set<Row>>& coset_orbits() {
    static const auto orbits = [] {
        std::map<int, std::set<Row>> m;
        auto words = coxeter::representative_words(coxeter::Space::M);
        for (const auto& [idx, word] : words) {
            auto vec = exactalg::mat_apply(exactalg::word_to_matrix(word, exactalg::Side::W), SymVec::identity(Alphabet::W));
            m[idx] = g_orbit(vec.entries);
        }
        return m;
    }();
    return orbits;
}

Rat bcoef(const LinForm& f) { return f.coef(1); }

bool has_shape(const Row& u, OrbitColor color) {
    if (!bcoef(u[0]).is_zero()) return false;
    std::vector<Rat> mids;
    for (int k = 2; k < 8; ++k) mids.push_back(bcoef(u[k]));
    std::sort(mids.begin(), mids.end());
    auto want = [&](int slot2, std::vector<int> m) {
        if (bcoef(u[1]) != Rat(slot2)) return false;
        for (int k = 0; k < 6; ++k)
            if (mids[k] != Rat(m[k])) return false;
        return true;
    };
    switch (color) {
    case OrbitColor::BlueL: return want(1, {-1, 0, 0, 0, 0, 0});
    case OrbitColor::RedL: return want(-1, {0, 0, 0, 0, 0, 1});
    case OrbitColor::J: return want(0, {-1, 0, 0, 0, 0, 1});
    }
    return false;
}

std::int64_t score(const Row& u) {
    std::int64_t s = 0;
    for (const auto& f : u) {
        s += std::abs((f.constant_term() * Rat(2)).num());
        for (int k = 0; k < 8; ++k) s += std::abs((f.coef(k) * Rat(2)).num());
    }
    return s;
}

std::vector<Rat> lex_key(const Row& u) {
    static const int order[] = {0, 7, 6, 5, 4, 3, 2, 1};  // a, h, g, f, e, d, c, b
    std::vector<Rat> key;
    for (const auto& f : u) {
        key.push_back(f.constant_term());
        for (int k : order) key.push_back(f.coef(k));
    }
    return key;
}

Row layout(const Row& u, OrbitColor color) {
    Row mids(u.begin() + 2, u.end()), rest;
    LinForm plus, minus;
    for (const auto& f : mids) {
        Rat b = bcoef(f);
        if (b == Rat(1)) plus = f;
        else if (b == Rat(-1)) minus = f;
        else rest.push_back(f);
    }
    std::sort(rest.begin(), rest.end(), [](const LinForm& x, const LinForm& y) { return x.str() < y.str(); });
    Row out{u[0], u[1]};
    out.insert(out.end(), rest.begin(), rest.end());
    if (color == OrbitColor::J) {
        out.push_back(plus);
        out.push_back(minus);
    } else {
        out.push_back(color == OrbitColor::BlueL ? minus : plus);
    }
    return out;
}

Row choose_plus(MLabel t) {
    auto cands = normal_form_candidates(t);
    if (cands.empty()) throw std::logic_error("appendix: no normal form for " + t.str());
    // The five tied S5-images for v(0,1) differ only in which of c..g joins b;
    // the limit derivation pairs b with g.
    if (t == MLabel::make(1, 0, 1)) {
        LinForm pin = exactalg::reduce(w("b+g-a"));
        std::erase_if(cands, [&](const Row& u) { return std::find(u.begin(), u.end(), pin) == u.end(); });
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& u : cands) best = std::min(best, score(u));
    const Row* pick = nullptr;
    for (const auto& u : cands)
        if (score(u) == best && (!pick || lex_key(u) < lex_key(*pick))) pick = &u;
    return *pick;
}

} // namespace

std::vector<std::vector<LinForm>> normal_form_candidates(MLabel t) {
    auto color = coxeter::gamma1(t).color;
    std::vector<Row> out;
    for (const auto& u : coset_orbits().at(t.index()))
        if (has_shape(u, color)) out.push_back(u);
    return out;
}

bool in_coset_orbit(MLabel t, const std::vector<LinForm>& args) {
    if (args.size() != 8) return false;
    return coset_orbits().at(t.index()).count(canon(args)) > 0;
}

const std::vector<AppendixRow>& appendix_table() {
    static const std::vector<AppendixRow> table = [] {
        std::vector<AppendixRow> rows;
        std::map<int, Row> plus;
        for (int idx = 0; idx < 28; ++idx) plus[idx] = choose_plus(MLabel::from_index(idx));
        for (int idx = 0; idx < 56; ++idx) {
            MLabel t = MLabel::from_index(idx);
            auto g = coxeter::gamma1(t);
            Row u;
            if (t.sign > 0) {
                u = plus[idx];
            } else {
                // The central involution Z sends each entry f to 1-f.
                for (const auto& f : plus[coxeter::central_involution(t).index()]) u.push_back(exactalg::reduce(Rat(1) - f));
                u = canon(u);
                if (!in_coset_orbit(t, u)) throw std::logic_error("appendix: Z image left the coset of " + t.str());
            }
            auto target = gamma2_target(t);
            rows.push_back({t, g.color, layout(u, g.color), target.kind, g.label, target.args});
        }
        return rows;
    }();
    return table;
}

std::vector<FixtureRow> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::vector<FixtureRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        try {
            auto parts = split(line, '|');
            if (parts.size() != 5) throw std::invalid_argument("expected 5 fields");
            FixtureRow r;
            r.label = MLabel::parse(parts[0]);
            if (parts[1] == "blue") r.color = OrbitColor::BlueL;
            else if (parts[1] == "red") r.color = OrbitColor::RedL;
            else if (parts[1] == "J") r.color = OrbitColor::J;
            else throw std::invalid_argument("unknown color '" + parts[1] + "'");
            for (const auto& s : split(parts[2], ',')) r.mArgs.push_back(exactalg::reduce(w(s)));
            r.targetLabel = TLabel::parse(parts[3]);
            for (const auto& s : split(parts[4], ',')) r.targetArgs.push_back(exactalg::reduce(w(s)));
            if (r.mArgs.size() != 8 || r.targetArgs.size() != 7) throw std::invalid_argument("wrong argument count");
            rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

bool same_row_shape(const std::vector<LinForm>& a, const std::vector<LinForm>& b) {
    if (a.size() != 8 || b.size() != 8) return false;
    return canon(a) == canon(b);
}

namespace {

std::vector<double> ratios(const std::vector<double>& e) {
    std::vector<double> r;
    for (std::size_t k = 1; k < e.size(); ++k) r.push_back(e[k] / e[k - 1]);
    return r;
}

std::string fmt(const std::vector<double>& xs) {
    std::ostringstream os;
    os.precision(3);
    for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? " " : "") << xs[k];
    return os.str();
}

} // namespace

GammaSinExpr limit_normalizer(const AppendixRow& row) {
    const auto& m = row.mArgs;
    GammaSinExpr g;
    if (row.color == OrbitColor::J) {
        // Gamma[1-b, 1+a-(g,h), b-a+(g,h)] in the row's letters.
        const LinForm &A = m[0], &B = m[1], &G = m[6], &H = m[7];
        g.gamma({Rat(1) - B, Rat(1) + A - G, Rat(1) + A - H, B - A + G, B - A + H});
    } else {
        // Gamma[1+a-h, b-a+(c,d,e,f,g) / b-a].
        const LinForm &A = m[0], &B = m[1];
        g.gamma({Rat(1) + A - m[7]});
        for (int k = 2; k < 7; ++k) g.gamma({B - A + m[k]});
        g.over_gamma({B - A});
    }
    for (auto* fs : {&g.num, &g.den})
        for (auto& f : *fs) f.arg = exactalg::reduce(f.arg);
    return g;
}

PointW shift_b(const PointW& p, double t) {
    PointW q = p;
    q.b += CNum(0, t);
    return q;
}

LimitReport check_limit(MLabel t, const PointW& p, const std::vector<double>& shifts, const hypnum::SeriesCtrl& ctrl, double factor) {
    LimitReport rep;
    rep.label = t;
    rep.shifts = shifts;
    try {
        const auto& row = appendix_table().at(t.index());
        auto norm = limit_normalizer(row);
        auto target = gamma2_target(t);
        auto base = p.values();
        rep.target = std::numbers::pi / 2 * target.eval(base, ctrl);
        for (double s : shifts) {
            auto vals = shift_b(p, s).values();
            CNum m = hypnum::eval_M(eval_all(row.mArgs, vals), ctrl);
            CNum val = (norm.eval_log(vals) + LogC::of(m)).exp();
            rep.values.push_back(val);
            rep.errors.push_back(std::abs(val / rep.target - 1.0));
        }
        bool dec = rep.errors.size() >= 2;
        for (std::size_t k = 1; k < rep.errors.size(); ++k) dec = dec && rep.errors[k] < rep.errors[k - 1];
        rep.pass = dec && rep.errors.back() <= factor * rep.errors.front();
        if (!rep.pass) rep.diagnostic = dec ? "final error above " + fmt({factor}) + " x initial" : "errors not strictly decreasing";
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.diagnostic = e.what();
    }
    return rep;
}

std::vector<LinForm> newx() {
    return ws({"c", "1+a-d-g", "1+a-e-g", "1+a-f-g", "1+c-g", "1+a-g", "2+2a-d-e-f-g"});
}


PipelineReport limit222_pipeline(const PointW& p, const std::vector<double>& shifts, const hypnum::SeriesCtrl& ctrl, const PipelineTol& tol) {
    PipelineReport rep;
    auto rels = builtin_relations();
    const double mTol = tol.m, jlTol = tol.jl;
    auto add = [&](PipelineStep s) { rep.steps.push_back(std::move(s)); };
    try {
        auto base = p.values();
        {
            auto e = eval_relation(rels.at("roy463"), base, ctrl);
            add({"roy463 residual at p", e.residual <= mTol, {e.residual}, "bound " + fmt({mTol})});
        }
        std::vector<std::vector<LogC>> shifted;
        {
            PipelineStep s{"roy463b residual at shifted points", true, {}, ""};
            for (double t : shifts) {
                auto e = eval_relation(rels.at("roy463b"), shift_b(p, t).values(), ctrl);
                s.values.push_back(e.residual);
                s.pass = s.pass && e.residual <= mTol;
                std::vector<LogC> logs;
                for (const auto& tv : e.terms) logs.push_back(tv.log);
                shifted.push_back(logs);
            }
            s.detail = "bound " + fmt({mTol});
            add(s);
        }
        {
            GammaSinExpr bracket, pair1, pair2;
            bracket.gamma({w("b+c-a"), w("h+c-a"), w("1+a-b"), w("1+a-h")}).over_gamma({w("b"), w("h"), w("1+c-b"), w("1+c-h")});
            pair1.gamma({w("b+c-a"), w("1+a-h")}).over_gamma({w("b"), w("1+c-h")});
            pair2.gamma({w("h+c-a"), w("1+a-b")}).over_gamma({w("h"), w("1+c-b")});
            std::vector<double> eb, e1, e2;
            for (double t : shifts) {
                auto vals = shift_b(p, t).values();
                eb.push_back(std::abs(bracket.eval(vals) - 1.0));
                e1.push_back(std::abs(pair1.eval(vals) - 1.0));
                e2.push_back(std::abs(pair2.eval(vals) - 1.0));
            }
            auto r = ratios(eb);
            bool ok = !r.empty();
            for (double x : r) ok = ok && x >= tol.ratioLo && x <= tol.ratioHi;
            add({"Pochhammer bracket -> 1, error ratio per doubling in [" + fmt({tol.ratioLo}) + ", " + fmt({tol.ratioHi}) + "]", ok, eb,
                 "ratios " + fmt(r) + "; (b)_y/(1+a-h)_y errors " + fmt(e1) + " ratios " + fmt(ratios(e1)) +
                     "; (h)_y/(1+a-b)_y errors " + fmt(e2) + " ratios " + fmt(ratios(e2))});
        }
        auto xf = newx();
        auto x = eval_all(xf, base);
        auto lim = eval_relation(rels.at("orbit1jll"), x, ctrl);
        {
            // roy463b terms 1, 2, 3 tend to the L_4, J_p0 and L_5 terms.
            const int to[3] = {1, 0, 2};
            PipelineStep s{"roy463b terms -> orbit1jll terms at x(newxdef)", true, {}, ""};
            for (int k = 0; k < 3; ++k) {
                std::vector<double> e;
                for (const auto& logs : shifted) e.push_back(std::abs((logs[k] - lim.terms[to[k]].log).exp() - 1.0));
                for (std::size_t j = 1; j < e.size(); ++j) s.pass = s.pass && e[j] < e[j - 1];
                s.values.insert(s.values.end(), e.begin(), e.end());
                s.detail += (k ? "; " : "") + std::string("term ") + std::to_string(k + 1) + " errors " + fmt(e);
            }
            add(s);
        }
        add({"orbit1jll residual at x(newxdef)", lim.residual <= jlTol, {lim.residual}, "bound " + fmt({jlTol})});
    } catch (const std::exception& e) {
        add({"evaluation", false, {}, e.what()});
    }
    rep.pass = !rep.steps.empty();
    for (const auto& s : rep.steps) rep.pass = rep.pass && s.pass;
    return rep;
}

bool relation_admissible(const Relation& r, std::span<const CNum> vals) {
    try {
        for (const auto& t : r.terms) {
            t.coef.eval_log(vals);
            t.fun.eval(vals);
        }
        return true;
    } catch (const std::domain_error&) {
        return false;
    } catch (const hypnum::ConvergenceError&) {
        return false;
    }
}

bool pipeline_admissible(const PointW& p, const std::vector<double>& shifts) {
    auto rels = builtin_relations();
    if (!relation_admissible(rels.at("roy463"), p.values())) return false;
    for (double t : shifts)
        if (!relation_admissible(rels.at("roy463b"), shift_b(p, t).values())) return false;
    auto x = eval_all(newx(), p.values());
    return relation_admissible(rels.at("orbit1jll"), x);
}

bool limit_admissible(MLabel t, const PointW& p, const std::vector<double>& shifts) {
    try {
        const auto& row = appendix_table().at(t.index());
        auto norm = limit_normalizer(row);
        gamma2_target(t).eval(p.values());
        for (double s : shifts) {
            auto vals = shift_b(p, s).values();
            norm.eval_log(vals);
            hypnum::eval_M(eval_all(row.mArgs, vals));
        }
        return true;
    } catch (const std::domain_error&) {
        return false;
    } catch (const hypnum::ConvergenceError&) {
        return false;
    }
}

} // namespace correspond
