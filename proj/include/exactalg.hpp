#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace exactalg {

// Fixed-width rational; every operation is overflow-checked and throws.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : num_(n) {}
    Rat(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return double(num_) / double(den_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat&, const Rat&) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

enum class Alphabet { W, V };

// W: a..h (8 symbols); V: A..G (7 symbols).
int alphabet_size(Alphabet al);
char symbol_name(Alphabet al, int i);

constexpr int kMaxSyms = 8;

class LinForm {
public:
    LinForm() = default;
    explicit LinForm(Alphabet al) : al_(al) {}
    static LinForm constant(Alphabet al, Rat c);
    static LinForm symbol(Alphabet al, int i);
    // Accepts sums of terms like "2+3a-b", "1/2c", "-3/2". Whitespace ignored.
    static LinForm parse(std::string_view s, Alphabet al);

    Alphabet alphabet() const { return al_; }
    int size() const { return alphabet_size(al_); }
    const Rat& constant_term() const { return c_; }
    const Rat& coef(int i) const { return k_.at(i); }
    void set_constant(Rat c) { c_ = c; }
    void set_coef(int i, Rat c) { k_.at(i) = c; }
    bool is_zero() const;

    LinForm operator-() const;
    LinForm& operator+=(const LinForm& o);
    LinForm& operator-=(const LinForm& o);
    LinForm& operator*=(const Rat& r);
    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(LinForm a, const Rat& r) { return a *= r; }
    friend LinForm operator*(const Rat& r, LinForm a) { return a *= r; }
    friend LinForm operator+(LinForm a, const Rat& r) { a.c_ += r; return a; }
    friend LinForm operator+(const Rat& r, LinForm a) { a.c_ += r; return a; }
    friend LinForm operator-(LinForm a, const Rat& r) { a.c_ -= r; return a; }
    friend LinForm operator-(const Rat& r, const LinForm& a) { return (-a) + r; }
    friend bool operator==(const LinForm&, const LinForm&) = default;
    friend auto operator<=>(const LinForm&, const LinForm&) = default;

    std::complex<double> eval(std::span<const std::complex<double>> vals) const;
    // Replace symbol i by subs[i]; result lives in the alphabet of subs.
    LinForm substitute(std::span<const LinForm> subs) const;

    std::string str() const;

private:
    Alphabet al_ = Alphabet::W;
    Rat c_;
    std::array<Rat, kMaxSyms> k_{};
};

// b+c+d+e+f+g+h-3a-2 on W; E+F+G-A-B-C-D-1 on V.
LinForm constraint(Alphabet al);
// Subtracts the multiple of the constraint that clears the last symbol.
LinForm reduce(const LinForm& f, Alphabet al);
LinForm reduce(const LinForm& f);
bool eq_mod_constraint(const LinForm& f, const LinForm& g, const LinForm& c);

struct SymVec {
    std::vector<LinForm> entries;
    LinForm constraint;

    static SymVec identity(Alphabet al);
    Alphabet alphabet() const { return constraint.alphabet(); }
    std::size_t size() const { return entries.size(); }
    const LinForm& operator[](std::size_t i) const { return entries[i]; }
    SymVec reduced() const;
    bool eq_mod(const SymVec& o) const;
};

class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(int n) : n_(n) { check_order(n); }
    static RatMatrix identity(int n);
    static RatMatrix from_ints(int n, std::initializer_list<std::int64_t> twice);
    // sigma e_i = e_{sigma(i)}; 1-based transposition (i j).
    static RatMatrix transposition(int n, int i, int j);
    // Cycles of 1-based indices, e.g. {{1,2,3,4},{5,6,7}}.
    static RatMatrix permutation(int n, const std::vector<std::vector<int>>& cycles);

    int order() const { return n_; }
    const Rat& at(int r, int c) const { return a_[r * 8 + c]; }
    Rat& at(int r, int c) { return a_[r * 8 + c]; }
    RatMatrix operator*(const RatMatrix& o) const;
    bool is_identity() const;
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    static void check_order(int n);
    int n_ = 0;
    std::array<Rat, 64> a_{};
};

SymVec mat_apply(const RatMatrix& m, const SymVec& v);

enum class Side { W, V };
using GenWord = std::vector<std::string>;

const std::vector<std::string>& generator_names(Side side);
RatMatrix generator(const std::string& name, Side side);
RatMatrix word_to_matrix(const GenWord& w, Side side);
// Parses "s1 s3' s2" or "s1,s3',s2"; empty string is the identity.
GenWord parse_word(std::string_view text);
std::string word_str(const GenWord& w);

RatMatrix matrix_X();
RatMatrix matrix_Y();
RatMatrix matrix_X1();
RatMatrix central_Z();
RatMatrix central_Z1();

// Coxeter exponents m_ij of the named generators (E7 on W, D6 on V).
int coxeter_exponent(const std::string& gi, const std::string& gj, Side side);

} // namespace exactalg
