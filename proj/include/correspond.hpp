#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "exactalg.hpp"
#include "hypnum.hpp"

namespace correspond {

using coxeter::MLabel;
using coxeter::OrbitColor;
using coxeter::TLabel;
using exactalg::Alphabet;
using exactalg::LinForm;
using exactalg::Rat;
using hypnum::CNum;
using hypnum::LogC;

enum class FunKind { M, J, L };
const char* fun_kind_name(FunKind k);

struct FunTerm {
    FunKind kind;
    std::vector<LinForm> args;  // M[a;b;c..h], J[A;B,C,D;E,F,G], L[A,B,C,D;E;F,G]

    // Checks the arity and the kind's hyperplane identity modulo the ambient constraint.
    static FunTerm make(FunKind kind, std::vector<LinForm> args);
    Alphabet alphabet() const { return args.front().alphabet(); }
    CNum eval(std::span<const CNum> vals, const hypnum::SeriesCtrl& ctrl = {}, hypnum::EvalDiag* diag = nullptr) const;
    // Coset label of the term; the args must be on their own side (W for M, V for J and L).
    std::string label() const;
    std::string str() const;
};

enum class FactorKind { Gamma, SinPi };

struct Factor {
    FactorKind kind;
    LinForm arg;
};

// prefactor * pi^piPow * prod(num) / prod(den), each factor Gamma(arg) or sin(pi arg).
struct GammaSinExpr {
    Rat prefactor{1};
    int piPow = 0;
    std::vector<Factor> num, den;

    GammaSinExpr& gamma(std::initializer_list<LinForm> args);
    GammaSinExpr& over_gamma(std::initializer_list<LinForm> args);
    GammaSinExpr& sin_pi(const LinForm& arg);
    GammaSinExpr& over_sin_pi(const LinForm& arg);
    GammaSinExpr& times(Rat r, int pi_pow = 0);

    bool is_zero() const { return prefactor.is_zero(); }
    LogC eval_log(std::span<const CNum> vals) const;
    CNum eval(std::span<const CNum> vals) const { return eval_log(vals).exp(); }
    GammaSinExpr substitute(std::span<const LinForm> subs) const;
    std::vector<LinForm> arguments() const;
    std::string str() const;
};

struct RelTerm {
    GammaSinExpr coef;
    FunTerm fun;
};

struct Relation {
    std::string name;
    std::vector<RelTerm> terms;
    std::string provenance;
};

std::map<std::string, Relation> builtin_relations();
// Change of variable w -> mu w for the word's matrix mu.
Relation translate_relation(const Relation& r, const exactalg::GenWord& word, exactalg::Side side);

struct TermValue {
    LogC log;
    bool lowPrecision = false;
};

struct RelationEval {
    double residual = 0;  // |sum| / max |term|
    std::vector<TermValue> terms;
    double logSpread = 0;  // max - min term log-magnitude
    bool allZero = false;
};
RelationEval eval_relation(const Relation& r, std::span<const CNum> vals, const hypnum::SeriesCtrl& ctrl = {});

// The seven forms of x(w) in a, c..g.
exactalg::SymVec xfromw();
// a, c..g as forms in A..G; the inverse of xfromw on its image.
std::vector<LinForm> wfromx();

FunTerm gamma2_target(MLabel t);

struct AppendixRow {
    MLabel label;
    OrbitColor color;
    std::vector<LinForm> mArgs;
    FunKind targetKind;
    TLabel targetLabel;
    std::vector<LinForm> targetArgs;
};

// Generated rows, +v labels first in index order, then -v.
const std::vector<AppendixRow>& appendix_table();
// All normal-form candidates of a label (mostly for tests).
std::vector<std::vector<LinForm>> normal_form_candidates(MLabel t);
bool in_coset_orbit(MLabel t, const std::vector<LinForm>& args);

struct FixtureRow {
    MLabel label;
    OrbitColor color;
    std::vector<LinForm> mArgs;
    TLabel targetLabel;
    std::vector<LinForm> targetArgs;
};
std::vector<FixtureRow> load_fixture(const std::string& path);
// Slots 1 and 2 exact, slots 3-8 as a multiset, after reduction.
bool same_row_shape(const std::vector<LinForm>& a, const std::vector<LinForm>& b);
// Classifies a W-side target argument list through wfromx.
TLabel classify_target(FunKind kind, const std::vector<LinForm>& args);

GammaSinExpr limit_normalizer(const AppendixRow& row);

struct LimitReport {
    MLabel label;
    std::vector<double> shifts;
    std::vector<double> errors;
    std::vector<CNum> values;  // normalized M at each shift
    CNum target;               // (pi/2) times the target function
    bool pass = false;
    std::string diagnostic;
};
hypnum::PointW shift_b(const hypnum::PointW& p, double t);
// Passes when the errors strictly decrease and the last is at most factor times the first.
LimitReport check_limit(MLabel t, const hypnum::PointW& p, const std::vector<double>& shifts, const hypnum::SeriesCtrl& ctrl = {},
                        double factor = 0.6);

struct PipelineStep {
    std::string name;
    bool pass = false;
    std::vector<double> values;
    std::string detail;
};
struct PipelineReport {
    std::vector<PipelineStep> steps;
    bool pass = false;
};
// The newxdef change of variable, forms in a..h.
std::vector<LinForm> newx();
struct PipelineTol {
    double m = 1e-5;   // roy463 and roy463b residuals
    double jl = 1e-7;  // orbit1jll residual
    double ratioLo = 0.3, ratioHi = 0.7;  // bracket error ratio per doubling of the shift
};
PipelineReport limit222_pipeline(const hypnum::PointW& p, const std::vector<double>& shifts, const hypnum::SeriesCtrl& ctrl = {},
                                 const PipelineTol& tol = {});

// Point admissibility used by samplers: every listed evaluation succeeds.
bool relation_admissible(const Relation& r, std::span<const CNum> vals);
bool pipeline_admissible(const hypnum::PointW& p, const std::vector<double>& shifts);
bool limit_admissible(MLabel t, const hypnum::PointW& p, const std::vector<double>& shifts);

} // namespace correspond
