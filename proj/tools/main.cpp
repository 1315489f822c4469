#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "correspond.hpp"
#include "coxeter.hpp"
#include "json.hpp"
#include "suite.hpp"

using nlohmann::json;

namespace {

// Bad input files and labels exit 2; failed checks exit 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

struct Out {
    Format fmt = Format::Text;
    json doc;
    std::ostringstream text;

    void flush() {
        if (fmt == Format::Json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

json cnum(hypnum::CNum z) { return json::array({z.real(), z.imag()}); }

std::string cnum_text(hypnum::CNum z) {
    std::ostringstream os;
    os << std::setprecision(17) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

json result_json(const suite::Result& r) {
    return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"notes", r.notes}, {"metrics", r.metrics}};
}

void result_text(std::ostream& os, const suite::Result& r) {
    os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << std::setw(2) << r.id << " " << r.name << "\n";
    for (const auto& n : r.notes) os << "       " << n << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Point {
    exactalg::Alphabet al;
    std::vector<hypnum::CNum> values;
};

// {"a": [re, im], ...} with a..g, or A..F; the last coordinate is derived.
Point read_point(const std::string& path) {
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    if (!j.is_object()) throw InputError(path + ": expected a JSON object");
    bool w = j.contains("a");
    const std::string keys = w ? "abcdefg" : "ABCDEF";
    std::vector<hypnum::CNum> v;
    for (char k : keys) {
        auto it = j.find(std::string(1, k));
        if (it == j.end() || !it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number())
            throw InputError(path + ": key '" + std::string(1, k) + "' must be a [re, im] pair");
        v.emplace_back((*it)[0].get<double>(), (*it)[1].get<double>());
    }
    if (j.size() != keys.size()) throw InputError(path + ": unexpected keys (the derived coordinate is never read)");
    if (w) {
        hypnum::PointW p{v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
        return {exactalg::Alphabet::W, p.values()};
    }
    hypnum::PointV p{v[0], v[1], v[2], v[3], v[4], v[5]};
    return {exactalg::Alphabet::V, p.values()};
}

std::vector<exactalg::LinForm> parse_args(const std::string& text, exactalg::Alphabet al) {
    std::vector<exactalg::LinForm> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(exactalg::LinForm::parse(item, al));
    return out;
}

json table_json() {
    json rows = json::array();
    for (const auto& r : correspond::appendix_table()) {
        json m = json::array(), t = json::array();
        for (const auto& f : r.mArgs) m.push_back(f.str());
        for (const auto& f : r.targetArgs) t.push_back(f.str());
        rows.push_back({{"label", r.label.str()},
                        {"color", coxeter::color_name(r.color)},
                        {"m_args", m},
                        {"target_kind", correspond::fun_kind_name(r.targetKind)},
                        {"target_label", r.targetLabel.str()},
                        {"target_args", t}});
    }
    return rows;
}

std::string joined(const std::vector<exactalg::LinForm>& fs) {
    std::string s;
    for (const auto& f : fs) s += (s.empty() ? "" : ", ") + f.str();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coset labels, special-function evaluation and verification for the M, J and L hypergeometric families"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    suite::Config cfg;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for sampled points")->capture_default_str();
    app.add_option("--fixture", cfg.fixture, "appendix fixture (default: the one shipped in data/)");
    app.add_option("--shifts", cfg.shifts, "Im(b) shifts for the limit checks")->capture_default_str();
    app.add_option("--rel-tol", cfg.ctrl.relTol, "series relative tolerance")->capture_default_str();
    app.add_option("--tol-jl", cfg.tol.jl, "J/L relative tolerance")->capture_default_str();
    app.add_option("--tol-m", cfg.tol.m, "M relative tolerance")->capture_default_str();
    app.add_option("--tol-appendix", cfg.tol.appendix, "appendix M agreement")->capture_default_str();
    app.add_option("--tol-gamma", cfg.tol.gamma, "reflection and recursion residuals")->capture_default_str();
    app.add_option("--tol-stirling", cfg.tol.stirling, "Stirling agreement at |z| = 1000")->capture_default_str();
    app.add_option("--limit-factor", cfg.tol.limitFactor, "required final/initial limit error ratio")->capture_default_str();
    app.add_option("--translate-factor", cfg.tol.translateFactor, "slack for translated relations")->capture_default_str();
    app.add_option("--ratio-lo", cfg.tol.ratioLo, "pipeline bracket ratio lower bound")->capture_default_str();
    app.add_option("--ratio-hi", cfg.tol.ratioHi, "pipeline bracket ratio upper bound")->capture_default_str();

    auto* orbits = app.add_subcommand("orbits", "the three Q-orbits on the 56 M cosets");
    auto* table = app.add_subcommand("table", "the 56 appendix rows");
    auto* distance = app.add_subcommand("distance", "dd between M labels or t-distance between J/L labels");
    std::string l1, l2;
    distance->add_option("l1", l1)->required();
    distance->add_option("l2", l2)->required();
    auto* classify = app.add_subcommand("classify", "triple orbit census of a label space");
    std::string space;
    classify->add_option("--space", space)->required()->check(CLI::IsMember({"M", "J", "L", "T"}));
    auto* order = app.add_subcommand("order", "order of a matrix group by BFS");
    std::string group;
    bool allowLarge = false;
    order->add_option("group", group, "GJ, GL, H1, Q, G or H")->required();
    order->add_flag("--allow-large", allowLarge, "permit W(E7): 2903040 elements, about 400 MB");
    auto* eval = app.add_subcommand("eval", "evaluate M, J or L at a point");
    std::string func, argsText, pointFile;
    eval->add_option("--func", func)->required()->check(CLI::IsMember({"M", "J", "L"}));
    eval->add_option("--args", argsText, "comma-separated argument forms (default: the identity arrangement)");
    eval->add_option("--point", pointFile, "JSON point file")->required();
    auto* check = app.add_subcommand("check", "run one verification suite");
    std::string what;
    check->add_option("what", what)->required()->check(CLI::IsMember({"invariance", "relations", "limits", "pipeline"}));
    check->add_option("--point", pointFile, "relations only: evaluate the builtin relations at this point");
    auto* selftest = app.add_subcommand("selftest", "all acceptance criteria");

    // Negative M labels such as -v(0,1) look like options to the parser; end option parsing before the first one.
    std::vector<std::string> args(argv + 1, argv + argc);
    auto neg = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind("-v(", 0) == 0; });
    if (neg != args.end()) args.insert(neg, "--");
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Out out;
    out.fmt = format == "json" ? Format::Json : Format::Text;
    int status = 0;
    try {
        if (*orbits) {
            auto o = coxeter::orbits_Q();
            for (int k = 0; k < 3; ++k) {
                json labels = json::array();
                std::string line;
                for (const auto& t : o[k]) {
                    labels.push_back(t.str());
                    line += " " + t.str();
                }
                out.doc["O" + std::to_string(k + 1)] = labels;
                out.text << "O" << k + 1 << " (" << o[k].size() << "):" << line << "\n";
            }
        } else if (*table) {
            out.doc = table_json();
            for (const auto& r : correspond::appendix_table())
                out.text << std::left << std::setw(8) << r.label.str() << " " << std::setw(5) << coxeter::color_name(r.color) << " M["
                         << joined(r.mArgs) << "]\n         -> " << correspond::fun_kind_name(r.targetKind) << "_" << r.targetLabel.str()
                         << " [" << joined(r.targetArgs) << "]\n";
        } else if (*distance) {
            int d;
            std::string kind;
            try {
                if (l1.find('v') != std::string::npos || l2.find('v') != std::string::npos) {
                    kind = "dd";
                    d = coxeter::dd(coxeter::MLabel::parse(l1), coxeter::MLabel::parse(l2));
                } else {
                    kind = "t_distance";
                    d = coxeter::t_distance(coxeter::TLabel::parse(l1), coxeter::TLabel::parse(l2));
                }
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            out.doc = {{"distance", d}, {"kind", kind}, {"labels", {l1, l2}}};
            out.text << d << "\n";
        } else if (*classify) {
            auto c = coxeter::triple_census(coxeter::parse_space(space));
            json orbs = json::array();
            out.text << space << ": " << c.total << " triples, " << c.orbits.size() << " orbits\n";
            for (const auto& o : c.orbits) {
                json first = json::array();
                std::string f;
                for (int i : o.first) {
                    first.push_back(coxeter::label_str(c.space, i));
                    f += " " + coxeter::label_str(c.space, i);
                }
                orbs.push_back({{"size", o.size}, {"tag", o.tag}, {"first", first}});
                out.text << "  " << std::left << std::setw(10) << o.tag << std::right << std::setw(7) << o.size << "  {" << f.substr(1) << "}\n";
            }
            out.doc = {{"space", space}, {"total", c.total}, {"orbits", orbs}, {"tags_constant", c.tags_constant}};
        } else if (*order) {
            coxeter::GroupName g;
            try {
                g = coxeter::parse_group(group);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            if (g == coxeter::GroupName::H && !allowLarge) throw InputError("W(E7) has 2903040 elements (about 400 MB); pass --allow-large");
            auto n = coxeter::group_order(g, allowLarge);
            out.doc = {{"group", coxeter::group_name(g)}, {"order", n}};
            out.text << coxeter::group_name(g) << " " << n << "\n";
        } else if (*eval) {
            auto p = read_point(pointFile);
            auto kind = func == "M" ? correspond::FunKind::M : func == "J" ? correspond::FunKind::J : correspond::FunKind::L;
            auto want = kind == correspond::FunKind::M ? exactalg::Alphabet::W : exactalg::Alphabet::V;
            if (p.al != want) throw InputError(func + " needs a " + (want == exactalg::Alphabet::W ? "W (a..g)" : "V (A..F)") + " point");
            std::vector<exactalg::LinForm> args;
            try {
                if (argsText.empty()) {
                    args = exactalg::SymVec::identity(want).entries;
                } else {
                    args = parse_args(argsText, want);
                }
                auto term = correspond::FunTerm::make(kind, args);
                hypnum::EvalDiag d;
                auto v = term.eval(p.values, cfg.ctrl, &d);
                out.doc = {{"term", term.str()}, {"value", cnum(v)}, {"converged", d.converged}, {"low_precision", d.lowPrecision},
                           {"err_estimate", d.errEstimate}, {"terms_used", d.termsUsed}};
                out.text << term.str() << " = " << cnum_text(v) << "\n";
                if (d.lowPrecision) out.text << "warning: the two series cancel to more than 9 digits\n";
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        } else if (*check && what == "relations" && !pointFile.empty()) {
            auto p = read_point(pointFile);
            auto rels = correspond::builtin_relations();
            bool ok = true;
            for (const auto& [name, rel] : rels) {
                if (rel.terms.front().fun.alphabet() != p.al) continue;
                double bound = p.al == exactalg::Alphabet::W ? cfg.tol.m : cfg.tol.jl;
                auto e = correspond::eval_relation(rel, p.values, cfg.ctrl);
                json terms = json::array();
                out.text << name << ": residual " << e.residual << " (bound " << bound << "), log spread " << e.logSpread << "\n";
                for (std::size_t k = 0; k < e.terms.size(); ++k) {
                    const auto& t = e.terms[k];
                    terms.push_back({{"log_magnitude", t.log.logMag}, {"phase", t.log.phase}, {"low_precision", t.lowPrecision}});
                    out.text << "  term " << k + 1 << ": log|.| " << t.log.logMag << ", phase " << t.log.phase << "\n";
                }
                bool pass = e.residual <= bound;
                if (e.allZero) out.text << "  warning: every coefficient vanishes\n";
                out.doc[name] = {{"residual", e.residual}, {"log_spread", e.logSpread}, {"bound", bound}, {"pass", pass}, {"terms", terms},
                                 {"all_zero", e.allZero}};
                ok = ok && pass;
            }
            status = ok ? 0 : 1;
        } else if (*check) {
            suite::Result r = what == "invariance" ? suite::check_invariance(cfg)
                              : what == "relations" ? suite::check_relations(cfg)
                              : what == "limits"    ? suite::check_limits(cfg)
                                                    : suite::check_pipeline(cfg);
            r.name = what;
            out.doc = {{"check", what}, {"pass", r.pass}, {"notes", r.notes}, {"metrics", r.metrics}, {"seed", cfg.seed}};
            out.text << "[" << (r.pass ? "PASS" : "FAIL") << "] " << what << "\n";
            for (const auto& n : r.notes) out.text << "       " << n << "\n";
            status = r.pass ? 0 : 1;
        } else if (*selftest) {
            json results = json::array();
            bool ok = true;
            for (int id = 1; id <= suite::kCriteria; ++id) {
                auto r = suite::run(id, cfg);
                results.push_back(result_json(r));
                result_text(out.text, r);
                ok = ok && r.pass;
            }
            out.doc = {{"criteria", results}, {"pass", ok}, {"seed", cfg.seed}};
            status = ok ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    out.flush();
    return status;
}
