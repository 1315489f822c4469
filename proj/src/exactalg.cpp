#include "exactalg.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace exactalg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rat: multiplication overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rat: addition overflow");
    return r;
}

} // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
        if (n == INT64_MIN || d == INT64_MIN) throw std::overflow_error("Rat: negation overflow");
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rat Rat::operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("Rat: negation overflow");
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    if (den_ == o.den_) return *this = Rat(checked_add(num_, o.num_), den_);
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, den_ / g));
    return *this = Rat(n, checked_mul(den_, o.den_ / g));
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return *this = Rat(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    return *this *= Rat(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    return l <=> r;
}

std::string Rat::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

int alphabet_size(Alphabet al) { return al == Alphabet::W ? 8 : 7; }

char symbol_name(Alphabet al, int i) { return char((al == Alphabet::W ? 'a' : 'A') + i); }

LinForm LinForm::constant(Alphabet al, Rat c) {
    LinForm f(al);
    f.c_ = c;
    return f;
}

LinForm LinForm::symbol(Alphabet al, int i) {
    LinForm f(al);
    f.k_.at(i) = 1;
    return f;
}

LinForm LinForm::parse(std::string_view s, Alphabet al) {
    LinForm f(al);
    std::string t;
    for (char ch : s)
        if (!std::isspace((unsigned char)ch)) t += ch;
    if (t.empty()) throw std::invalid_argument("LinForm: empty expression");
    std::size_t p = 0;
    bool first = true;
    while (p < t.size()) {
        int sign = 1;
        if (t[p] == '+' || t[p] == '-') {
            sign = t[p] == '-' ? -1 : 1;
            ++p;
        } else if (!first) {
            throw std::invalid_argument("LinForm: expected sign in '" + t + "'");
        }
        first = false;
        std::int64_t num = 1, den = 1;
        bool have_num = false;
        if (p < t.size() && std::isdigit((unsigned char)t[p])) {
            num = 0;
            while (p < t.size() && std::isdigit((unsigned char)t[p])) num = checked_add(checked_mul(num, 10), t[p++] - '0');
            have_num = true;
            if (p < t.size() && t[p] == '/') {
                ++p;
                if (p >= t.size() || !std::isdigit((unsigned char)t[p])) throw std::invalid_argument("LinForm: bad fraction in '" + t + "'");
                den = 0;
                while (p < t.size() && std::isdigit((unsigned char)t[p])) den = checked_add(checked_mul(den, 10), t[p++] - '0');
            }
        }
        Rat coef(sign * num, den);
        if (p < t.size() && std::isalpha((unsigned char)t[p])) {
            char base = al == Alphabet::W ? 'a' : 'A';
            int i = t[p] - base;
            if (i < 0 || i >= alphabet_size(al)) throw std::invalid_argument(std::string("LinForm: unknown symbol '") + t[p] + "'");
            f.k_[i] += coef;
            ++p;
        } else if (have_num) {
            f.c_ += coef;
        } else {
            throw std::invalid_argument("LinForm: dangling sign in '" + t + "'");
        }
    }
    return f;
}

bool LinForm::is_zero() const {
    if (!c_.is_zero()) return false;
    for (int i = 0; i < size(); ++i)
        if (!k_[i].is_zero()) return false;
    return true;
}

LinForm LinForm::operator-() const {
    LinForm r(al_);
    r.c_ = -c_;
    for (int i = 0; i < size(); ++i) r.k_[i] = -k_[i];
    return r;
}

LinForm& LinForm::operator+=(const LinForm& o) {
    if (o.al_ != al_) throw std::invalid_argument("LinForm: alphabet mismatch");
    c_ += o.c_;
    for (int i = 0; i < size(); ++i) k_[i] += o.k_[i];
    return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) { return *this += -o; }

LinForm& LinForm::operator*=(const Rat& r) {
    c_ *= r;
    for (int i = 0; i < size(); ++i) k_[i] *= r;
    return *this;
}

std::complex<double> LinForm::eval(std::span<const std::complex<double>> vals) const {
    if ((int)vals.size() < size()) throw std::invalid_argument("LinForm::eval: too few values");
    std::complex<double> s = c_.to_double();
    for (int i = 0; i < size(); ++i)
        if (!k_[i].is_zero()) s += k_[i].to_double() * vals[i];
    return s;
}

LinForm LinForm::substitute(std::span<const LinForm> subs) const {
    if ((int)subs.size() != size()) throw std::invalid_argument("LinForm::substitute: size mismatch");
    LinForm r = LinForm::constant(subs[0].alphabet(), c_);
    for (int i = 0; i < size(); ++i)
        if (!k_[i].is_zero()) r += subs[i] * k_[i];
    return r;
}

std::string LinForm::str() const {
    std::ostringstream os;
    bool any = false;
    if (!c_.is_zero()) {
        os << c_.str();
        any = true;
    }
    for (int i = 0; i < size(); ++i) {
        const Rat& k = k_[i];
        if (k.is_zero()) continue;
        bool neg = k < Rat(0);
        Rat a = neg ? -k : k;
        if (neg) os << '-';
        else if (any) os << '+';
        if (a != Rat(1)) os << a.str();
        os << symbol_name(al_, i);
        any = true;
    }
    return any ? os.str() : "0";
}

LinForm constraint(Alphabet al) {
    LinForm c(al);
    if (al == Alphabet::W) {
        c.set_constant(-2);
        c.set_coef(0, -3);
        for (int i = 1; i < 8; ++i) c.set_coef(i, 1);
    } else {
        c.set_constant(-1);
        for (int i = 0; i < 4; ++i) c.set_coef(i, -1);
        for (int i = 4; i < 7; ++i) c.set_coef(i, 1);
    }
    return c;
}

LinForm reduce(const LinForm& f, Alphabet al) {
    if (f.alphabet() != al) throw std::invalid_argument("reduce: alphabet mismatch");
    LinForm c = constraint(al);
    int last = alphabet_size(al) - 1;
    Rat lam = f.coef(last) / c.coef(last);
    return f - c * lam;
}

LinForm reduce(const LinForm& f) { return reduce(f, f.alphabet()); }

bool eq_mod_constraint(const LinForm& f, const LinForm& g, const LinForm& c) {
    if (f.alphabet() != g.alphabet() || f.alphabet() != c.alphabet())
        throw std::invalid_argument("eq_mod_constraint: alphabet mismatch");
    LinForm d = f - g;
    int pivot = -1;
    for (int i = 0; i < c.size(); ++i)
        if (!c.coef(i).is_zero()) { pivot = i; break; }
    Rat lam;
    if (pivot >= 0) lam = d.coef(pivot) / c.coef(pivot);
    else if (!c.constant_term().is_zero()) lam = d.constant_term() / c.constant_term();
    else throw std::invalid_argument("eq_mod_constraint: zero constraint");
    return (d - c * lam).is_zero();
}

SymVec SymVec::identity(Alphabet al) {
    SymVec v;
    v.constraint = exactalg::constraint(al);
    for (int i = 0; i < alphabet_size(al); ++i) v.entries.push_back(LinForm::symbol(al, i));
    return v;
}

SymVec SymVec::reduced() const {
    SymVec r = *this;
    for (auto& e : r.entries) e = reduce(e);
    return r;
}

bool SymVec::eq_mod(const SymVec& o) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (!eq_mod_constraint(entries[i], o.entries[i], constraint)) return false;
    return true;
}

void RatMatrix::check_order(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("RatMatrix: order must be 1..8");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_ints(int n, std::initializer_list<std::int64_t> twice) {
    if ((int)twice.size() != n * n) throw std::invalid_argument("RatMatrix::from_ints: wrong entry count");
    RatMatrix m(n);
    int k = 0;
    for (auto v : twice) {
        m.at(k / n, k % n) = Rat(v, 2);
        ++k;
    }
    return m;
}

RatMatrix RatMatrix::transposition(int n, int i, int j) { return permutation(n, {{i, j}}); }

RatMatrix RatMatrix::permutation(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles)
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            int from = cyc[t] - 1, to = cyc[(t + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("permutation: index out of range");
            img[from] = to;
        }
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(img[i], i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("RatMatrix: order mismatch");
    RatMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rat s;
            for (int k = 0; k < n_; ++k)
                if (!at(i, k).is_zero() && !o.at(k, j).is_zero()) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

bool RatMatrix::is_identity() const { return *this == identity(n_); }

SymVec mat_apply(const RatMatrix& m, const SymVec& v) {
    if ((std::size_t)m.order() != v.size()) throw std::invalid_argument("mat_apply: dimension mismatch");
    SymVec r;
    r.constraint = v.constraint;
    for (int i = 0; i < m.order(); ++i) {
        LinForm s(v.alphabet());
        for (int k = 0; k < m.order(); ++k)
            if (!m.at(i, k).is_zero()) s += v.entries[k] * m.at(i, k);
        r.entries.push_back(s);
    }
    return r;
}

RatMatrix matrix_X() {
    return RatMatrix::from_ints(8, {
         1, 1, -1, -1, -1, 1, 1, 1,
         0, 2,  0,  0,  0, 0, 0, 0,
        -1, 1,  1, -1, -1, 1, 1, 1,
        -1, 1, -1,  1, -1, 1, 1, 1,
        -1, 1, -1, -1,  1, 1, 1, 1,
         0, 0,  0,  0,  0, 2, 0, 0,
         0, 0,  0,  0,  0, 0, 2, 0,
         0, 0,  0,  0,  0, 0, 0, 2});
}

RatMatrix matrix_Y() {
    return RatMatrix::from_ints(8, {
        -2, 4, 0, 0, 0, 0, 0, 0,
        -2, 2, 2, 0, 0, 0, 0, 0,
         0, 2, 0, 0, 0, 0, 0, 0,
        -2, 2, 0, 2, 0, 0, 0, 0,
        -2, 2, 0, 0, 2, 0, 0, 0,
        -2, 2, 0, 0, 0, 2, 0, 0,
        -2, 2, 0, 0, 0, 0, 2, 0,
        -2, 2, 0, 0, 0, 0, 0, 2});
}

RatMatrix matrix_X1() {
    return RatMatrix::from_ints(7, {
        2,  0,  0, 0, 0, 0, 0,
        0,  0, -2, 0, 2, 0, 0,
        0, -2,  0, 0, 2, 0, 0,
        0,  0,  0, 2, 0, 0, 0,
        0,  0,  0, 0, 2, 0, 0,
        0, -2, -2, 0, 2, 2, 0,
        0, -2, -2, 0, 2, 0, 2});
}

// The unique linear map with Z w = 1 - w on W.  Since 1 = (b+...+h-3a)/2
// there, row i is (-3/2, 1/2, ..., 1/2) - e_i.
RatMatrix central_Z() {
    RatMatrix m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.at(i, j) = (j == 0 ? Rat(-3, 2) : Rat(1, 2)) - Rat(i == j ? 1 : 0);
    return m;
}

RatMatrix central_Z1() {
    RatMatrix p = RatMatrix::permutation(7, {{1, 2, 3, 4}, {5, 6, 7}});
    RatMatrix t = p * p * matrix_X1();
    RatMatrix t4 = t * t * t * t;
    return RatMatrix::transposition(7, 1, 4) * RatMatrix::transposition(7, 2, 3) * t4;
}

const std::vector<std::string>& generator_names(Side side) {
    static const std::vector<std::string> w{"s1", "s2", "s3", "s4", "s5", "s3'", "s6"};
    static const std::vector<std::string> v{"a1", "a2", "a3", "a4", "a5", "a1'"};
    return side == Side::W ? w : v;
}

RatMatrix generator(const std::string& name, Side side) {
    if (side == Side::W) {
        if (name == "s1") return matrix_Y() * RatMatrix::transposition(8, 2, 3);
        if (name == "s2") return RatMatrix::transposition(8, 3, 4);
        if (name == "s3") return RatMatrix::transposition(8, 4, 5);
        if (name == "s4") return RatMatrix::transposition(8, 5, 6);
        if (name == "s5") return RatMatrix::transposition(8, 6, 7);
        if (name == "s6") return RatMatrix::transposition(8, 7, 8);
        if (name == "s3'") return matrix_X();
    } else {
        if (name == "a1") return RatMatrix::transposition(7, 2, 3);
        if (name == "a2") return RatMatrix::transposition(7, 3, 4);
        if (name == "a3") return matrix_X1();
        if (name == "a4") return RatMatrix::transposition(7, 5, 6);
        if (name == "a5") return RatMatrix::transposition(7, 6, 7);
        if (name == "a1'") return RatMatrix::transposition(7, 1, 4);
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

RatMatrix word_to_matrix(const GenWord& w, Side side) {
    RatMatrix m = RatMatrix::identity(side == Side::W ? 8 : 7);
    for (const auto& g : w) m = m * generator(g, side);
    return m;
}

GenWord parse_word(std::string_view text) {
    GenWord w;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) w.push_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        if (std::isspace((unsigned char)ch) || ch == ',' || ch == '*' || ch == '.') flush();
        else cur += ch;
    }
    flush();
    return w;
}

std::string word_str(const GenWord& w) {
    std::string s;
    for (const auto& g : w) s += (s.empty() ? "" : " ") + g;
    return s;
}

// E7: s1-s2-s3-s4-s5-s6 chain with s3' attached to s4.
// D6: a1-a2-a3-a4-a5 chain with a1' attached to a2.
int coxeter_exponent(const std::string& gi, const std::string& gj, Side side) {
    if (gi == gj) return 1;
    auto pos = [&](const std::string& g) -> int {
        const auto& names = generator_names(side);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == g) return (int)i;
        throw std::invalid_argument("unknown generator '" + g + "'");
    };
    pos(gi);
    pos(gj);
    auto adjacent = [&](const std::string& x, const std::string& y) {
        if (side == Side::W) {
            if (x == "s3'" || y == "s3'") return (x == "s3'" ? y : x) == "s4";
            return std::abs(x[1] - y[1]) == 1;
        }
        if (x == "a1'" || y == "a1'") return (x == "a1'" ? y : x) == "a2";
        return std::abs(x[1] - y[1]) == 1;
    };
    return adjacent(gi, gj) ? 3 : 2;
}

} // namespace exactalg
