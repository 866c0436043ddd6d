#include <sys/file.h>

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hs/cotstruct.hpp"
#include "hs/errors.hpp"
#include "hs/humphreys.hpp"
#include "hs/ktheory.hpp"

using namespace hs;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "hs-report/1";

enum Exit { kOk = 0, kInput = 2, kCalibration = 3, kInconclusive = 4, kBreach = 5 };

struct Globals {
    bool text = false;
    std::string cache_dir;
    std::string type = "SL";
    int rank = 2;
    std::string config;
};

std::vector<Int> parse_ints(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError("not an integer list: " + s);
        }
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

RootDatum make_datum(const Globals& g) {
    if (!g.config.empty()) return RootDatum::load_config(g.config);
    if (g.type == "GL") return RootDatum::GL(g.rank);
    if (g.type == "SL") return RootDatum::SL(g.rank);
    throw InputError("unknown type " + g.type + " (GL or SL, or pass --config)");
}

Vec parse_weight(const RootDatum& d, const std::string& s) {
    Vec v = parse_ints(s);
    if (static_cast<int>(v.size()) != d.dim()) throw InputError("weight " + s + " needs " + std::to_string(d.dim()) + " coordinates");
    return v;
}

// e | word of simple reflection indices joined by '.' | t:<weight>
ExtAffineElement parse_element(const AffineWeyl& aw, const std::string& s) {
    if (s == "e") return aw.identity();
    if (s.rfind("t:", 0) == 0) return aw.translation(parse_weight(aw.datum(), s.substr(2)));
    std::vector<int> word;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw InputError("bad element " + s);
        int i = std::stoi(tok);
        if (i >= aw.num_simple()) throw InputError("no simple reflection s" + tok);
        word.push_back(i);
    }
    return aw.from_word(word);
}

json element_json(const AffineWeyl& aw, const ExtAffineElement& w) {
    auto nf = aw.coxeter_normal_form(w);
    return {{"element", aw.str(w)}, {"word", nf.word}, {"omega", nf.omega_label}, {"length", aw.length(w)}};
}

// Append-only cache of Bruhat comparisons, one line per entry.
class BruhatCache {
public:
    BruhatCache(std::string dir, const AffineWeyl& aw) : aw_(aw) {
        if (dir.empty()) return;
        std::filesystem::create_directories(dir);
        path_ = dir + "/hs-cache.v1";
        int fd = ::open(path_.c_str(), O_RDONLY | O_CREAT, 0644);
        if (fd < 0) throw InputError("cannot open cache " + path_);
        ::flock(fd, LOCK_SH);
        std::ifstream in(path_);
        std::string line;
        std::string key = aw.datum().key();
        while (std::getline(in, line)) {
            std::stringstream ls(line);
            std::string kind, dk, u, w;
            int v = -1;
            if (!(ls >> kind >> dk >> u >> w >> v) || kind != "bruhat" || dk != key || (v != 0 && v != 1)) continue;
            try {
                auto k = AffineWeyl::MemoKey{decode(u), decode(w)};
                aw.memo_insert(k, v == 1);
                seen_.insert(k);
            } catch (const std::exception&) {
            }
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
    }

    void flush() {
        if (path_.empty()) return;
        std::string out;
        for (auto& [k, v] : aw_.memo_snapshot())
            if (!seen_.count(k))
                out += "bruhat " + aw_.datum().key() + " " + encode(k.first) + " " + encode(k.second) + " " + (v ? "1" : "0") + "\n";
        if (out.empty()) return;
        int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
        if (fd < 0) return;
        ::flock(fd, LOCK_EX);
        ssize_t n = ::write(fd, out.data(), out.size());
        (void)n;
        ::flock(fd, LOCK_UN);
        ::close(fd);
    }

private:
    std::string encode(const ExtAffineElement& w) const {
        std::string s = std::to_string(w.v.id);
        for (Int x : w.lam) s += "," + std::to_string(x);
        return s;
    }
    ExtAffineElement decode(const std::string& s) const {
        auto v = parse_ints(s);
        if (static_cast<int>(v.size()) != aw_.datum().dim() + 1 || v[0] < 0 || v[0] >= static_cast<Int>(aw_.datum().weyl_order()))
            throw InputError("bad cache entry");
        return {{static_cast<int>(v[0])}, Vec(v.begin() + 1, v.end())};
    }

    const AffineWeyl& aw_;
    std::string path_;
    std::set<AffineWeyl::MemoKey> seen_;
};

// Anchor block carried by every report.
json base_calibration() {
    auto gl2 = RootDatum::GL(2);
    AffineWeyl aw(gl2);
    return {{"orbits_gl2_p5", calibrate_humphreys(aw, 5).to_json()}};
}

void render_text(std::ostream& os, const json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
                os << pad << k << ":\n";
                render_text(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                render_text(os, v, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Globals& g, const std::string& command, const json& calibration, const json& result) {
    json out;
    out["schema"] = kSchema;
    out["command"] = command;
    out["calibration"] = calibration;
    out["result"] = result;
    if (g.text) {
        std::cout << command << "\n";
        render_text(std::cout, result, 2);
    } else {
        std::cout << out.dump(2) << "\n";
    }
}

AlgebraPtr load_algebra(const std::string& path) {
    if (path.empty()) throw InputError("--algebra is required");
    return QuiverAlgebra::load(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cells, nilpotent orbits, characters and co-t-structures"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--text", g.text, "Human-readable output instead of JSON");
    app.add_flag("--json", [&](std::int64_t) { g.text = false; }, "JSON output (default)");
    app.add_option("--cache-dir", g.cache_dir, "Directory of the persistent Bruhat cache");
    app.add_option("--type", g.type, "GL or SL");
    app.add_option("--rank,--n", g.rank, "Matrix size n of GL_n / SL_n");
    app.add_option("--config", g.config, "Root datum config file (overrides --type/--rank)");

    int result_code = kOk;
    std::function<void()> action;

    // humphreys
    auto* hum = app.add_subcommand("humphreys", "Support prediction for a tilting module of GL_n");
    Int hp = 0;
    std::string hmu;
    hum->add_option("--p", hp, "Prime p > n")->required();
    hum->add_option("--mu", hmu, "Dominant weight a,b,...")->required();
    hum->callback([&] {
        action = [&] {
            auto d = RootDatum::GL(g.rank);
            AffineWeyl aw(d);
            auto r = humphreys(aw, hp, parse_weight(d, hmu));
            emit(g, "humphreys", r.calibration.to_json(), r.to_json(aw));
        };
    });

    // affine
    auto* aff = app.add_subcommand("affine", "Extended affine Weyl group utilities");
    aff->require_subcommand(1);
    std::string ea, eb, lam;
    auto* alen = aff->add_subcommand("len", "Length of an element");
    alen->add_option("element", ea, "e, a word like 0.1.2, or t:<weight>")->required();
    auto* awmin = aff->add_subcommand("wmin", "Minimal representative of W t_lambda");
    awmin->add_option("--lambda", lam, "Weight")->required();
    auto* abru = aff->add_subcommand("bruhat", "Is u <= w in the Bruhat order");
    abru->add_option("u", ea)->required();
    abru->add_option("w", eb)->required();
    auto* aord = aff->add_subcommand("order", "Bruhat relation between u and w");
    aord->add_option("u", ea)->required();
    aord->add_option("w", eb)->required();
    aff->callback([&] {
        action = [&] {
            auto d = make_datum(g);
            AffineWeyl aw(d);
            BruhatCache cache(g.cache_dir, aw);
            json res;
            std::string cmd;
            if (alen->parsed()) {
                cmd = "affine len";
                res = element_json(aw, parse_element(aw, ea));
            } else if (awmin->parsed()) {
                cmd = "affine wmin";
                Vec l = parse_weight(d, lam);
                res = element_json(aw, aw.min_coset_rep(l));
                res["lambda"] = l;
            } else {
                auto u = parse_element(aw, ea), w = parse_element(aw, eb);
                bool le = aw.bruhat_leq(u, w);
                if (abru->parsed()) {
                    cmd = "affine bruhat";
                    res = {{"u", aw.str(u)}, {"w", aw.str(w)}, {"leq", le}};
                } else {
                    cmd = "affine order";
                    bool ge = aw.bruhat_leq(w, u);
                    std::string rel = le && ge ? "equal" : le ? "less" : ge ? "greater" : "incomparable";
                    res = {{"u", aw.str(u)}, {"w", aw.str(w)}, {"relation", rel}};
                }
            }
            res["datum"] = d.key();
            cache.flush();
            emit(g, cmd, base_calibration(), res);
        };
    });

    // char
    auto* chr = app.add_subcommand("char", "Graded characters");
    chr->require_subcommand(1);
    std::string clam = "0";
    Int tmax = 8, maxw = 3;
    auto* caj = chr->add_subcommand("aj", "Character of A_lambda");
    auto* cnab = chr->add_subcommand("nabla", "Characters of nabla-bar and delta-bar");
    auto* cfree = chr->add_subcommand("freecheck", "Sum identity for the free module O_N (x) M(lambda)");
    for (auto* s : {caj, cnab, cfree}) {
        s->add_option("--lambda", clam, "Weight");
        s->add_option("--tmax", tmax, "Truncation degree in q");
    }
    auto* ctri = chr->add_subcommand("triangular", "Free module characters in the A basis");
    ctri->add_option("--max-weight", maxw, "Coordinates of the weights in [-M, M]");
    ctri->add_option("--tmax", tmax, "Truncation degree in q");
    chr->callback([&] {
        action = [&] {
            auto d = make_datum(g);
            if (tmax < 0) throw InputError("--tmax must be nonnegative");
            auto cal = calibrate_characters(d, std::max<Int>(tmax, 4));
            CharacterEngine e(d, cal.chosen);
            json res;
            std::string cmd;
            res["datum"] = d.key();
            res["tmax"] = tmax;
            if (ctri->parsed()) {
                cmd = "char triangular";
                AffineWeyl aw(d);
                std::vector<LaurentCharacter> targets, basis;
                std::vector<Vec> tl, bl;
                Vec x(d.dim(), -maxw);
                while (true) {
                    basis.push_back(e.aj_character(x, tmax));
                    bl.push_back(x);
                    if (d.is_dominant(x)) {
                        targets.push_back(e.free_module_character(x, tmax));
                        tl.push_back(x);
                    }
                    int i = 0;
                    while (i < d.dim() && x[i] == maxw) x[i++] = -maxw;
                    if (i == d.dim()) break;
                    ++x[i];
                }
                auto r = triangular_expansion(targets, tl, basis, bl, [&](const Vec& a, const Vec& b) { return aw.weight_leq(a, b); },
                                              ExpansionMode::Scalar);
                res["targets"] = tl;
                res["basis"] = bl;
                res["expansion"] = r.to_json();
            } else {
                Vec l = parse_weight(d, clam);
                res["lambda"] = l;
                if (caj->parsed()) {
                    cmd = "char aj";
                    res["character"] = to_json(e.aj_character(l, tmax));
                } else if (cnab->parsed()) {
                    cmd = "char nabla";
                    res["nabla_bar"] = to_json(e.nabla_bar_character(l, tmax));
                    res["delta_bar"] = to_json(e.delta_bar_character(l, tmax));
                } else {
                    cmd = "char freecheck";
                    if (!d.is_dominant(l)) throw InputError("lambda must be dominant");
                    bool ok = e.verify_aj_sum_identity(l, tmax);
                    res["pass"] = ok;
                    if (!ok) result_code = kBreach;
                }
            }
            json calj = base_calibration();
            calj["characters"] = cal.to_json();
            emit(g, cmd, calj, res);
        };
    });

    // cotstruct
    auto* cot = app.add_subcommand("cotstruct", "Co-t-structures on complexes of graded projectives");
    cot->require_subcommand(1);
    std::string alg_path;
    int width = 4, spread = 2;
    bool two_term = false;
    auto* cver = cot->add_subcommand("verify", "Co-t-structure axioms and the pre-exceptional report");
    cver->add_option("--width", width, "Maximal width of enumerated complexes");
    cver->add_option("--twist", spread, "Twist window [-k, k]");
    auto* ccen = cot->add_subcommand("silting-census", "Basic silting objects");
    ccen->add_flag("--two-term", two_term, "Two-term complexes in degrees -1, 0")->required();
    auto* ctil = cot->add_subcommand("tilting", "Indecomposable objects T_s of the coheart");
    for (auto* s : {cver, ccen, ctil}) s->add_option("--algebra", alg_path, "Algebra presentation file")->required();
    cot->callback([&] {
        action = [&] {
            auto A = load_algebra(alg_path);
            json res;
            std::string cmd;
            res["algebra"] = {{"file", std::filesystem::path(alg_path).filename().string()}, {"dim", A->dim()}, {"field", A->field().str()}};
            if (cver->parsed()) {
                cmd = "cotstruct verify";
                auto reps = indecomposable_catalogue(A, width, 2 * spread);
                auto objs = placements(reps, -(width / 2), width - 1 - width / 2, -spread, spread);
                std::vector<ProjComplex> all = objs;
                for (std::size_t a = 0; a < objs.size(); ++a)
                    for (std::size_t b = a; b < objs.size(); ++b) all.push_back(direct_sum(objs[a], objs[b]));
                res["catalogue"] = reps.size();
                res["axioms"] = verify_cot_axioms(all, objs).to_json();
                if (!res["axioms"]["ok"].get<bool>()) result_code = kBreach;
                if (!A->heredity_order().empty()) {
                    auto so = standard_objects(A);
                    auto rep = verify_pre_exceptional(so.delta, so.nabla, so.iota);
                    res["pre_exceptional"] = rep.to_json();
                    if (rep.generation == Verdict::Inconclusive) result_code = kInconclusive;
                }
            } else if (ccen->parsed()) {
                cmd = "cotstruct silting-census";
                auto c = two_term_silting_census(A);
                res["census"] = c.to_json();
                if (c.inconclusive > 0) result_code = kInconclusive;
            } else {
                cmd = "cotstruct tilting";
                auto so = standard_objects(A);
                auto rep = verify_pre_exceptional(so.delta, so.nabla, so.iota);
                res["pre_exceptional"] = rep.to_json();
                auto arr = json::array();
                for (std::size_t s = 0; s < so.order.size(); ++s) {
                    auto t = construct_indecomposable_silting(so, rep, static_cast<int>(s));
                    arr.push_back({{"vertex", A->vertex_name(so.order[s])},
                                   {"delta", so.delta[s].str()},
                                   {"nabla", so.nabla[s].str()},
                                   {"T", t.T.str()},
                                   {"T_complex", t.T.to_json()},
                                   {"factorization_ok", t.factorization_ok}});
                    if (!t.factorization_ok) result_code = kBreach;
                }
                res["tilting"] = arr;
            }
            emit(g, cmd, base_calibration(), res);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }
    try {
        if (action) action();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const CalibrationError& e) {
        std::cerr << "calibration failure: " << e.what() << "\n";
        return kCalibration;
    } catch (const Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const InvariantBreach& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kBreach;
    }
    return result_code;
}
