// tensorforge: command-line front end over the exact tensor toolkit.
// Every report is JSON; --human flattens it to key: value lines.
// Exit codes: 0 success, 1 domain failure (invalid witness, bad input
// values), 2 usage or parse errors.

#include "tf/apolarity.hpp"
#include "tf/asymptotic.hpp"
#include "tf/castling.hpp"
#include "tf/degeneration.hpp"
#include "tf/json_io.hpp"
#include "tf/matmul.hpp"
#include "tf/multilinear.hpp"
#include "tf/orbit222.hpp"
#include "tf/strassen.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

using namespace tf;

namespace {

bool g_human = false;

void render_human(const Json& j, const std::string& prefix)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            render_human(v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array()) {
        bool nested = false;
        for (const auto& v : j)
            if (v.is_object() || v.is_array())
                nested = true;
        if (!nested) {
            std::cout << prefix << ": " << j.dump() << "\n";
        } else {
            for (size_t i = 0; i < j.size(); ++i)
                render_human(j[i], prefix + "[" + std::to_string(i) + "]");
        }
    } else {
        std::cout << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const Json& j)
{
    if (g_human)
        render_human(j, "");
    else
        std::cout << j.dump(2) << "\n";
}

RatTensor load_tensor(const std::string& path)
{
    return parse_rat_tensor_text(read_file(path));
}

RatDecomposition load_decomposition(const std::string& path)
{
    return parse_decomposition_text(read_file(path));
}

HomogPoly load_poly(const std::string& path)
{
    return parse_poly_text(read_file(path));
}

DimTuple parse_dims(const std::string& s)
{
    DimTuple t;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size() || v < 1)
                throw std::invalid_argument(tok);
            t.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad dimension tuple entry: \"" + tok + "\"");
        }
    }
    if (t.empty())
        throw ParseError("empty dimension tuple");
    return t;
}

std::vector<long> parse_longs(const std::string& s)
{
    DimTuple t = parse_dims(s);
    return t;
}

Json matrix_json(const RatMat& m)
{
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (long i = 0; i < m.rows(); ++i)
        for (long c = 0; c < m.cols(); ++c)
            if (m.at(i, c) != 0)
                entries.push_back(Json::array({rat_str(m.at(i, c)), Json::array({i, c})}));
    j["entries"] = std::move(entries);
    return j;
}

std::vector<RatMat> load_maps(const std::string& path)
{
    Json j = Json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || !j.contains("maps") || !j["maps"].is_array())
        throw ParseError("restriction file needs a \"maps\" array of matrices");
    std::vector<RatMat> maps;
    for (const auto& mj : j["maps"]) {
        if (!mj.is_array() || mj.empty())
            throw ParseError("each map must be a non-empty array of rows");
        long rows = (long)mj.size(), cols = (long)mj[0].size();
        RatMat m = rat_mat(rows, cols);
        for (long r = 0; r < rows; ++r) {
            if (!mj[r].is_array() || (long)mj[r].size() != cols)
                throw ParseError("ragged restriction matrix");
            for (long c = 0; c < cols; ++c)
                m.at(r, c) = rat_parse(mj[r][c].get<std::string>());
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

long infer_base(const RatDecomposition& d)
{
    if (d.shape.size() != 3 || d.shape[0] != d.shape[1] || d.shape[1] != d.shape[2])
        throw DomainError("algorithm file must have cubical order-3 shape");
    long n = (long)std::lround(std::sqrt((double)d.shape[0]));
    if (n * n != d.shape[0])
        throw DomainError("algorithm shape is not (n^2, n^2, n^2)");
    return n;
}

Json opcount_json(const OpCount& ops)
{
    return Json{{"multiplications", ops.multiplications},
                {"additions", ops.additions},
                {"scalings", ops.scalings},
                {"depth", ops.depth}};
}

Json witness_json(const TightnessWitness& w)
{
    return Json{{"alpha", w.labels[0]}, {"beta", w.labels[1]}, {"gamma", w.labels[2]}};
}

Json certificate_json(const WaringCertificate& c)
{
    Json j;
    j["rank"] = c.rank;
    j["field"] = c.m == 1 ? std::string("Q") : "Q(zeta_" + std::to_string(c.m) + ")";
    j["catalecticant_ranks"] = c.catalecticant_ranks;
    j["has_decomposition"] = c.has_decomposition;
    if (c.has_decomposition) {
        Json dec = Json::array();
        for (const auto& [coeff, form] : c.decomposition) {
            Json fj = Json::array();
            for (const auto& x : form)
                fj.push_back(cyclotomic_json(x));
            dec.push_back(Json{{"coeff", cyclotomic_json(coeff)}, {"form", std::move(fj)}});
        }
        j["decomposition"] = std::move(dec);
    }
    if (c.kernel_degree >= 0) {
        j["kernel_degree"] = c.kernel_degree;
        j["generator"] = serialize_poly(c.generator);
        j["generator_squarefree"] = c.generator_squarefree;
    }
    return j;
}

Json castling_json(const CastlingReport& rep)
{
    Json j;
    j["input"] = rep.input;
    j["N"] = rep.N.get_str();
    j["minimal"] = rep.minimal;
    Json trace = Json::array();
    for (const auto& step : rep.trace)
        trace.push_back(Json{{"index", step.index}, {"result", step.result}});
    j["trace"] = std::move(trace);
    j["prehomogeneous"] = to_string(rep.prehomogeneous);
    j["finite_orbits"] = to_string(rep.finite_orbits);
    j["rule"] = rep.rule;
    return j;
}

std::string twelve_digits(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

} // namespace

int run(int argc, char** argv)
{
    CLI::App app{"tensorforge: exact tensor rank and matrix-multiplication toolkit"};
    app.require_subcommand(1);
    app.add_flag("--human", g_human, "flatten JSON reports to key: value lines");
    int rc = 0;

    // ---- tensor ----
    auto* tcmd = app.add_subcommand("tensor", "tensor container operations");
    tcmd->require_subcommand(1);
    {
        static std::string file, file2, maps_file;
        static int leg = 1;

        auto* p = tcmd->add_subcommand("parse", "parse a tensor file and echo it back");
        p->add_option("file", file)->required();
        p->callback([&] { emit(serialize_tensor(parse_tensor_text(read_file(file)))); });

        auto* x = tcmd->add_subcommand("expand", "expand a decomposition into a dense tensor");
        x->add_option("file", file)->required();
        x->callback([&] {
            auto d = load_decomposition(file);
            emit(serialize_tensor(tensor_from_terms(d.shape, d, Rational(0))));
        });

        auto* f = tcmd->add_subcommand("flatten", "flattening matrix along one leg");
        f->add_option("file", file)->required();
        f->add_option("--leg", leg, "leg, 1-based")->required();
        f->callback([&] { emit(matrix_json(flattening(load_tensor(file), leg))); });

        auto* m = tcmd->add_subcommand("mlrank", "multilinear rank");
        m->add_option("file", file)->required();
        m->callback([&] { emit(Json{{"multilinear_rank", multilinear_rank(load_tensor(file))}}); });

        auto* k = tcmd->add_subcommand("kron", "Kronecker product of two tensors");
        k->add_option("file1", file)->required();
        k->add_option("file2", file2)->required();
        k->callback([&] { emit(serialize_tensor(kronecker(load_tensor(file), load_tensor(file2)))); });

        auto* s = tcmd->add_subcommand("symmetrize", "average over all leg permutations");
        s->add_option("file", file)->required();
        s->callback([&] { emit(serialize_tensor(symmetrize(load_tensor(file)))); });

        auto* r = tcmd->add_subcommand("restrict", "apply restriction maps leg by leg");
        r->add_option("file", file)->required();
        r->add_option("maps", maps_file, "JSON file with a \"maps\" matrix list")->required();
        r->callback([&] { emit(serialize_tensor(apply_restriction(load_maps(maps_file), load_tensor(file)))); });
    }

    // ---- orbit222 ----
    auto* ocmd = app.add_subcommand("orbit222", "classification of 2x2x2 tensors");
    ocmd->require_subcommand(1);
    {
        static std::string file;
        auto* c = ocmd->add_subcommand("classify", "orbit class, ranks, hyperdeterminant, pencils");
        c->add_option("file", file)->required();
        c->callback([&] {
            RatTensor t = load_tensor(file);
            auto cls = classify_222(t);
            Json j;
            j["class"] = to_string(cls.label);
            j["multilinear_rank"] = cls.mlrank;
            j["complex_rank"] = cls.complex_rank;
            j["real_rank"] = cls.real_rank;
            j["det"] = rat_str(cls.det);
            if (cls.rank2_decomposition)
                j["rank2_decomposition"] = serialize_decomposition(*cls.rank2_decomposition);
            Json pencils = Json::array();
            for (int leg = 1; leg <= 3; ++leg) {
                auto rep = pencil_report(t, leg);
                pencils.push_back(Json{{"leg", rep.leg},
                                       {"degenerate", rep.degenerate},
                                       {"det_form", Json::array({rat_str(rep.q), rat_str(rep.r), rat_str(rep.s)})},
                                       {"discriminant", rat_str(rep.discriminant)},
                                       {"tangency", to_string(rep.tangency)}});
            }
            j["pencils"] = std::move(pencils);
            emit(j);
        });
    }

    // ---- mm ----
    auto* mcmd = app.add_subcommand("mm", "matrix-multiplication tensors and algorithms");
    mcmd->require_subcommand(1);
    {
        static long n = 2, r = 7, size = 128, cutoff = -1;
        static bool transposed = false, use_float = false, perturbed = false;
        static std::string tensor_file, decomp_file, alg_file, kind = "rank", sizes = "2,4,8,16";

        auto* b = mcmd->add_subcommand("build", "emit M<n> (or M'<n>) as a tensor file");
        b->add_option("--n", n)->required();
        b->add_flag("--transposed-third", transposed);
        b->callback([&] { emit(serialize_tensor(matmul_tensor({n, transposed}))); });

        auto* v = mcmd->add_subcommand("verify", "check a decomposition against a tensor file");
        v->add_option("--tensor", tensor_file)->required();
        v->add_option("--decomp", decomp_file)->required();
        v->callback([&] {
            auto res = verify_decomposition(load_tensor(tensor_file), load_decomposition(decomp_file));
            Json j{{"valid", res.valid}};
            if (!res.valid) {
                j["first_differing_index"] = res.first_differing_index;
                rc = 1;
            }
            emit(j);
        });

        auto* o = mcmd->add_subcommand("omega", "exponent bound log_n r");
        o->add_option("--n", n)->required();
        o->add_option("--r", r)->required();
        o->add_option("--kind", kind)->check(CLI::IsMember({"rank", "border-rank"}));
        o->callback([&] {
            auto eb = omega_bound(n, r, kind == "rank" ? BoundKind::Rank : BoundKind::BorderRank);
            emit(Json{{"n", eb.n},
                      {"r", eb.r},
                      {"kind", kind},
                      {"bound", twelve_digits(eb.bound)},
                      {"suspicious", eb.suspicious}});
        });

        auto* run_ = mcmd->add_subcommand("run", "multiply random matrices with a compiled algorithm");
        run_->add_option("--alg", alg_file)->required();
        run_->add_option("--size", size);
        run_->add_option("--cutoff", cutoff);
        run_->add_flag("--transposed-third", transposed);
        run_->add_flag("--float", use_float, "machine floats, timing only (not authoritative)");
        run_->callback([&] {
            auto d = load_decomposition(alg_file);
            auto alg = compile(d, {infer_base(d), transposed});
            Json j{{"size", size}, {"mode", use_float ? "float" : "exact"}};
            if (use_float) {
                long cut = cutoff < 0 ? 64 : cutoff;
                j["cutoff"] = cut;
                j["seconds"] = multiply_float_seconds(alg, size, cut);
            } else {
                long cut = cutoff < 0 ? 1 : cutoff;
                j["cutoff"] = cut;
                auto rep = benchmark(alg, {size}, cut);
                j["ops"] = opcount_json(rep.rows[0].ops);
                j["seconds"] = rep.rows[0].seconds;
            }
            emit(j);
        });

        auto* be = mcmd->add_subcommand("bench", "op counts and log-log slope over several sizes");
        be->add_option("--alg", alg_file)->required();
        be->add_option("--sizes", sizes, "comma-separated sizes");
        be->add_option("--cutoff", cutoff);
        be->add_flag("--transposed-third", transposed);
        be->callback([&] {
            auto d = load_decomposition(alg_file);
            auto alg = compile(d, {infer_base(d), transposed});
            auto rep = benchmark(alg, parse_longs(sizes), cutoff < 0 ? 1 : cutoff);
            Json rows = Json::array();
            for (const auto& row : rep.rows)
                rows.push_back(Json{{"size", row.size},
                                    {"ops", opcount_json(row.ops)},
                                    {"seconds", row.seconds}});
            emit(Json{{"rows", std::move(rows)}, {"slope", rep.slope}});
        });

        auto* ch = mcmd->add_subcommand("chilo-check", "restriction of symmetrize(M<3n>) to 3 M<n>");
        ch->add_option("--n", n)->required();
        ch->add_flag("--perturbed", perturbed, "negative control: shift one projection block");
        ch->callback([&] {
            bool ok = chilo_restriction_check(n, perturbed);
            emit(Json{{"n", n}, {"perturbed", perturbed}, {"ok", ok}});
            if (!ok)
                rc = 1;
        });
    }

    // ---- degen ----
    auto* dcmd = app.add_subcommand("degen", "degeneration witnesses / border-rank calculus");
    dcmd->require_subcommand(1);
    {
        static std::string wfile, tfile, wfile2, tfile2;

        auto* v = dcmd->add_subcommand("verify", "verify a witness against a target tensor");
        v->add_option("--witness", wfile)->required();
        v->add_option("--target", tfile)->required();
        v->callback([&] {
            auto w = make_witness(load_tensor(tfile), parse_witness_text(read_file(wfile)));
            auto res = verify_degeneration(w);
            Json j{{"valid", res.valid}};
            if (!res.valid) {
                j["bad_degree"] = res.bad_degree;
                j["bad_index"] = res.bad_index;
                rc = 1;
            }
            emit(j);
        });

        auto* t = dcmd->add_subcommand("to-rank", "extract an exact rank decomposition");
        t->add_option("--witness", wfile)->required();
        t->add_option("--target", tfile)->required();
        t->callback([&] {
            auto w = make_witness(load_tensor(tfile), parse_witness_text(read_file(wfile)));
            emit(serialize_decomposition(degeneration_to_rank(w)));
        });

        auto* k = dcmd->add_subcommand("kron", "Kronecker product of two witnesses");
        k->add_option("--witness", wfile)->required();
        k->add_option("--target", tfile)->required();
        k->add_option("--witness2", wfile2)->required();
        k->add_option("--target2", tfile2)->required();
        k->callback([&] {
            auto w1 = make_witness(load_tensor(tfile), parse_witness_text(read_file(wfile)));
            auto w2 = make_witness(load_tensor(tfile2), parse_witness_text(read_file(wfile2)));
            auto w = kronecker_degeneration(w1, w2);
            DegenerationWitnessData data{w.q, w.target.shape(), w.terms};
            emit(serialize_witness(data));
        });
    }

    // ---- castle ----
    auto* ccmd = app.add_subcommand("castle", "prehomogeneity via Castling transforms");
    ccmd->require_subcommand(1);
    {
        static std::string dims;

        auto* c = ccmd->add_subcommand("classify", "full report for a dimension tuple");
        c->add_option("dims", dims, "comma-separated, e.g. 2,4,4")->required();
        c->callback([&] { emit(castling_json(classify(parse_dims(dims)))); });

        auto* r = ccmd->add_subcommand("reduce", "Castling reduction to the minimal element");
        r->add_option("dims", dims)->required();
        r->callback([&] {
            auto t = parse_dims(dims);
            auto [minimal, trace] = minimal_element(t);
            Json tr = Json::array();
            for (const auto& step : trace)
                tr.push_back(Json{{"index", step.index}, {"result", step.result}});
            emit(Json{{"input", t}, {"minimal", minimal}, {"trace", std::move(tr)}});
        });
    }

    // ---- apolar ----
    auto* acmd = app.add_subcommand("apolar", "apolarity and Waring ranks");
    acmd->require_subcommand(1);
    {
        static std::string file, file2, exps;

        auto* h = acmd->add_subcommand("hilbert", "Hilbert function of A_f");
        h->add_option("file", file)->required();
        h->callback([&] {
            auto hf = hilbert_function(load_poly(file));
            long total = 0;
            for (long x : hf)
                total += x;
            emit(Json{{"hilbert", hf}, {"total", total}});
        });

        auto* wm = acmd->add_subcommand("waring-monomial", "Waring rank of a monomial with certificate");
        wm->add_option("exponents", exps, "comma-separated, e.g. 1,2,2")->required();
        wm->callback([&] { emit(certificate_json(waring_rank_monomial(parse_longs(exps)))); });

        auto* wb = acmd->add_subcommand("waring-binary", "Sylvester rank of a binary form");
        wb->add_option("file", file)->required();
        wb->callback([&] { emit(certificate_json(waring_rank_binary(load_poly(file)))); });

        auto* an = acmd->add_subcommand("annihilates", "do the ideal generators annihilate f?");
        an->add_option("ideal", file, "JSON {\"gens\":[poly, ...]}")->required();
        an->add_option("poly", file2)->required();
        an->callback([&] {
            Json ij = Json::parse(read_file(file), nullptr, false);
            if (ij.is_discarded() || !ij.contains("gens") || !ij["gens"].is_array())
                throw ParseError("ideal file needs a \"gens\" array of polynomials");
            std::vector<DiffOp> gens;
            for (const auto& gj : ij["gens"])
                gens.push_back(parse_poly(gj));
            auto res = annihilates(gens, load_poly(file2));
            Json j{{"ok", res.ok}};
            if (!res.ok) {
                j["bad_generator"] = res.bad_generator;
                j["bad_multiplier"] = res.bad_multiplier;
                rc = 1;
            }
            emit(j);
        });

        auto* df = acmd->add_subcommand("diff", "apply a differential operator to a polynomial");
        df->add_option("operator", file)->required();
        df->add_option("poly", file2)->required();
        df->callback([&] { emit(serialize_poly(diff_apply(load_poly(file), load_poly(file2)))); });
    }

    // ---- asymp ----
    auto* scmd = app.add_subcommand("asymp", "asymptotic-rank estimates and tightness");
    scmd->require_subcommand(1);
    {
        static std::string file, wfile;

        auto* fe = scmd->add_subcommand("fekete", "upper bound min_k r_k^(1/k) from samples");
        fe->add_option("file", file, "JSON {\"samples\":[[k, \"r\"], ...]}")->required();
        fe->callback([&] {
            Json sj = Json::parse(read_file(file), nullptr, false);
            if (sj.is_discarded() || !sj.contains("samples") || !sj["samples"].is_array())
                throw ParseError("samples file needs a \"samples\" array");
            std::vector<std::pair<long, Integer>> samples;
            for (const auto& e : sj["samples"]) {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError("each sample must be [k, \"r\"]");
                samples.push_back({e[0].get<long>(), Integer(e[1].get<std::string>())});
            }
            auto est = asymptotic_rank_bound(samples);
            Json out;
            Json ss = Json::array();
            for (const auto& [k, rv] : est.samples)
                ss.push_back(Json::array({k, rv.get_str()}));
            out["samples"] = std::move(ss);
            out["best_k"] = est.best_k;
            out["best_r"] = est.best_r.get_str();
            out["bound_approx"] = est.approx;
            out["warnings"] = est.warnings;
            emit(out);
        });

        auto* ti = scmd->add_subcommand("tight", "find or verify a tightness witness");
        ti->add_option("file", file)->required();
        ti->add_option("--witness", wfile, "JSON {\"alpha\":[...],\"beta\":[...],\"gamma\":[...]}");
        ti->callback([&] {
            RatTensor t = load_tensor(file);
            if (!wfile.empty()) {
                Json wj = Json::parse(read_file(wfile), nullptr, false);
                if (wj.is_discarded())
                    throw ParseError("invalid witness JSON");
                TightnessWitness w;
                for (const char* key : {"alpha", "beta", "gamma"}) {
                    if (!wj.contains(key))
                        throw ParseError(std::string("witness missing \"") + key + "\"");
                    w.labels.push_back(wj[key].get<std::vector<long>>());
                }
                bool ok = verify_tight(t, w);
                emit(Json{{"valid", ok}});
                if (!ok)
                    rc = 1;
            } else {
                auto w = find_tight(t);
                Json j{{"tight", (bool)w}};
                if (w)
                    j["witness"] = witness_json(*w);
                else
                    j["note"] = "not tight in this basis";
                emit(j);
            }
        });

        auto* co = scmd->add_subcommand("concise", "is the multilinear rank full?");
        co->add_option("file", file)->required();
        co->callback([&] { emit(Json{{"concise", is_concise(load_tensor(file))}}); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return rc;
}

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
