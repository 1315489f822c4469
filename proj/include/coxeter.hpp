#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactalg.hpp"

namespace coxeter {

using exactalg::GenWord;
using exactalg::Side;

// +v(i,j) / -v(i,j), 0 <= i < j <= 7.
struct MLabel {
    int sign = 1;
    int i = 0, j = 7;

    static MLabel make(int sign, int i, int j);
    static MLabel from_index(int idx);
    static MLabel parse(std::string_view s);
    int index() const;  // 0..55, all + labels first
    std::string str() const;
    friend bool operator==(const MLabel&, const MLabel&) = default;
    friend auto operator<=>(const MLabel& a, const MLabel& b) { return a.index() <=> b.index(); }
};

// Sign string of length 6 stored as a bit mask: bit k set means position k+1 is '-'.
struct JLabel {
    std::uint8_t minus = 0;

    static JLabel from_string(std::string_view s);
    static JLabel from_pn(bool negated, int k);
    static JLabel from_index(int idx);
    static JLabel parse(std::string_view s);  // "p11", "n13" or "+-+-++"
    bool negated() const;  // an n label
    int k() const;         // the p/n subscript
    int index() const;     // 0..31: p0..p15, n0..n15
    std::string signs() const;
    std::string str() const;  // "p11"
    friend bool operator==(const JLabel&, const JLabel&) = default;
    friend auto operator<=>(const JLabel& a, const JLabel& b) { return a.index() <=> b.index(); }
};

struct LLabel {
    int idx = 4;
    bool bar = false;

    static LLabel from_index(int idx);
    static LLabel parse(std::string_view s);
    int index() const;  // 0..11
    std::string str() const;
    friend bool operator==(const LLabel&, const LLabel&) = default;
    friend auto operator<=>(const LLabel& a, const LLabel& b) { return a.index() <=> b.index(); }
};

struct TLabel {
    bool is_j = false;
    JLabel j;
    LLabel l;

    static TLabel of(JLabel x) { return {true, x, {}}; }
    static TLabel of(LLabel x) { return {false, {}, x}; }
    static TLabel from_index(int idx);
    static TLabel parse(std::string_view s);
    int index() const;  // L labels 0..11, J labels 12..43
    std::string str() const;
    friend bool operator==(const TLabel& a, const TLabel& b) { return a.index() == b.index(); }
    friend auto operator<=>(const TLabel& a, const TLabel& b) { return a.index() <=> b.index(); }
};

enum class OrbitColor { BlueL, RedL, J };
const char* color_name(OrbitColor c);

MLabel act_M(const std::string& g, MLabel t);
JLabel act_J(const std::string& g, JLabel t);
LLabel act_L(const std::string& g, LLabel t);
TLabel act_T(const std::string& g, TLabel t);
// Applies a word left to right: the first letter acts first.
MLabel act_M(const GenWord& w, MLabel t);
JLabel act_J(const GenWord& w, JLabel t);

MLabel central_involution(MLabel t);
TLabel central_involution(TLabel t);

// x_0..x_7 = b,h,g,f,e,d,c,a as W-side symbol indices.
int x_symbol(int i);

MLabel coset_classify_M(const exactalg::SymVec& v);
JLabel coset_classify_J(const exactalg::SymVec& v);
// Classification by the first entry alone.
JLabel classify_J_first(const exactalg::LinForm& first);
// The (A..G) argument list of the L coset row for the label, as V-side forms.
std::vector<exactalg::LinForm> lcoset_row(LLabel t);
// Reads the G_L-invariant F+G-E of an argument list in L order.
LLabel classify_L_args(const std::vector<exactalg::LinForm>& args);
LLabel coset_classify_L(const exactalg::SymVec& v);

struct Gamma1 {
    OrbitColor color;
    TLabel label;
};
Gamma1 gamma1(MLabel t);
std::string m_iso(const std::string& g);

std::array<std::vector<MLabel>, 3> orbits_Q();

std::array<int, 8> vij_vector(MLabel t);
int dd(MLabel u, MLabel v);
// Case table in terms of shared indices and signs.
int dd_case_table(MLabel u, MLabel v);
int hamming(JLabel a, JLabel b);
// Preimage under gamma1 used for distances: Blue for L labels, O3 for J labels.
MLabel t_preimage(TLabel t);
int t_distance(TLabel s, TLabel t);

enum class Space { M, J, L, T };
Space parse_space(std::string_view s);
const char* space_name(Space s);
int space_size(Space s);
std::string label_str(Space s, int idx);
int act_index(Space s, const std::string& g, int idx);
const std::vector<std::string>& space_generators(Space s);

// Type tag of a triple of distinct label indices in the space.
std::string classify_triple(Space s, std::array<int, 3> t);

struct OrbitInfo {
    std::size_t size = 0;
    std::string tag;
    std::array<int, 3> first{};  // smallest member, as label indices
};

struct TripleCensus {
    Space space;
    std::size_t total = 0;
    std::vector<OrbitInfo> orbits;  // sorted by first member
    bool tags_constant = true;
};
TripleCensus triple_census(Space s);

enum class GroupName { GJ, GL, H1, Q, G, H };
GroupName parse_group(std::string_view s);
const char* group_name(GroupName g);
std::vector<exactalg::RatMatrix> group_generators(GroupName g);
// Matrix BFS.  The full W(E7) (H) needs allow_large.
std::uint64_t group_order(GroupName g, bool allow_large = false);

// Breadth-first representative words for every coset label, using the side's
// generator order.  Keys are label indices.
std::map<int, GenWord> representative_words(Space s);

} // namespace coxeter
